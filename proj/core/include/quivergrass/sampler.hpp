#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivergrass/enumeration.hpp"
#include "quivergrass/polynomial.hpp"
#include "quivergrass/representation.hpp"

namespace quivergrass {

/// Integer matrices with entries uniform in [-bound, bound], reproducible
/// from (q, d, seed, bound). Throws InvalidArgument when bound < 2.
Representation sample_general_rep(const Quiver& q, const DimensionVector& d, std::uint64_t seed,
                                  long bound = 5);

struct SmoothnessReport {
  std::uint32_t prime = 0;
  DimensionVector e;
  /// <e, d - e>, the dimension every tangent space has when Gr_e(M) is smooth
  /// of the expected dimension.
  long expected_dim = 0;
  /// dim Hom(N, M/N) -> number of F_p-points N with that tangent dimension.
  std::map<std::size_t, std::uint64_t> tangent_dims;
  std::uint64_t points = 0;
  bool smooth_consistent = false;

  nlohmann::json to_json() const;
};

/// Tangent-space census of Gr_e(M)(F_p). Throws NotAcyclic, SearchTooLarge.
SmoothnessReport smoothness_probe(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                                  const EnumerationOptions& options = {});

/// Nonzero homogeneous quartic in three variables with integer coefficients.
class QuarticForm {
 public:
  /// Throws DegenerateForm unless `f` is a nonzero degree-4 form in 3 variables.
  explicit QuarticForm(Polynomial f);

  const Polynomial& polynomial() const { return f_; }
  std::uint32_t evaluate_mod(const std::array<std::uint32_t, 3>& v, std::uint32_t p) const;
  /// True when f and its three partial derivatives all vanish at v mod p.
  bool is_singular_mod(const std::array<std::uint32_t, 3>& v, std::uint32_t p) const;
  std::string to_string() const { return f_.to_string("v"); }

 private:
  Polynomial f_;
  std::array<Polynomial, 3> partials_;
};

/// f(v) = det[phi_1 v | phi_2 v | phi_3 v | phi_4 v] for a representation of
/// the 4-arrow Kronecker quiver with dimension vector (3,4). Its zero locus
/// is the set of lines span(v) whose four images lie in a hyperplane.
/// Throws DegenerateForm when f vanishes identically.
QuarticForm example4_quartic(const Representation& rep);

/// Representatives of P^2(F_p) with first nonzero coordinate 1.
std::vector<std::array<std::uint32_t, 3>> projective_plane_points(std::uint32_t p);

struct PrimeWitness {
  std::uint32_t prime = 0;
  bool smooth = false;
  std::vector<std::array<std::uint32_t, 3>> singular_points;
  std::uint64_t curve_points = 0;
  Integer grassmannian_points;
  /// Curve points whose image matrix has rank < 3.
  std::vector<std::array<std::uint32_t, 3>> rank_deficient_points;
  bool match = false;
};

struct Example4Report {
  std::string quartic;
  bool is_quartic = false;
  std::vector<PrimeWitness> per_prime;  // sorted by prime
  /// -4 from the genus-degree formula, present only when at least one prime
  /// was checked and every gate passed.
  std::optional<int> chi;
  bool interpolation_non_polynomial = false;
  std::string interpolation_message;

  bool gates_passed() const;
  nlohmann::json to_json() const;
};

/// Computes all witnesses without throwing on failed gates.
Example4Report example4_witnesses(const Representation& rep, const std::vector<std::uint32_t>& primes,
                                  const EnumerationOptions& options = {});

/// example4_witnesses, then throws SmoothnessFailure or CountMismatch
/// (detail = prime) for the first failing prime.
Example4Report example4_verify(const Representation& rep, const std::vector<std::uint32_t>& primes,
                               const EnumerationOptions& options = {});

struct PositivityEntry {
  DimensionVector e;
  std::optional<Integer> chi;
  /// Set when the interpolation route refused this e.
  std::optional<std::string> refusal;
  /// Value supplied by an external certificate for a refused e.
  std::optional<int> forwarded_chi;
};

struct PositivityReport {
  bool rigid = false;
  std::vector<PositivityEntry> entries;
  std::vector<DimensionVector> negative;

  bool nonnegative() const { return negative.empty(); }
  nlohmann::json to_json() const;
};

/// chi(Gr_e(M)) for every 0 <= e <= dim M. Requires hom(M,M) = 1 and, when
/// `require_rigid`, ext^1(M,M) = 0 (InvalidArgument otherwise). With
/// `counterexample`, a refusal at e = (1,3) carries its certified chi.
PositivityReport positivity_scan(const Representation& rep, bool require_rigid,
                                 const EnumerationOptions& options = {},
                                 const Example4Report* counterexample = nullptr);

}  // namespace quivergrass
