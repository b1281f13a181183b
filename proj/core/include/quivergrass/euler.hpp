#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quivergrass/enumeration.hpp"
#include "quivergrass/polynomial.hpp"
#include "quivergrass/representation.hpp"

namespace quivergrass {

struct CountSample {
  std::uint64_t prime = 0;
  Integer count;
};

/// Univariate polynomial in q whose values at the sample primes are the
/// point counts of Gr_e(M).
struct CountingPolynomial {
  std::vector<Integer> coefficients;  // ascending powers of q; empty means 0
  DimensionVector dim_vector;
  std::vector<CountSample> samples;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Integer evaluate(const Integer& q) const;
  std::string to_string() const;
};

/// Interpolates through the first degree_bound+1 samples with exact rational
/// arithmetic and validates against every remaining sample (at least two).
/// Throws InsufficientSamples or NonPolynomialCount.
CountingPolynomial interpolate_counting_polynomial(std::span<const CountSample> samples, int degree_bound);

/// sum_i e_i (d_i - e_i): dimension of the ambient product of Grassmannians.
int dimension_bound(const DimensionVector& d, const DimensionVector& e);

/// Odd primes (from 3 upwards) at which an integer/rational representation
/// reduces without losing rank in any arrow matrix and without enlarging its
/// endomorphism algebra; reductions are cached.
class PrimeSchedule {
 public:
  explicit PrimeSchedule(const Representation& rep);

  /// The first `count` usable primes.
  std::vector<std::uint32_t> first(std::size_t count);
  const Representation& reduced(std::uint32_t p);
  const std::vector<std::uint32_t>& skipped() const { return skipped_; }

 private:
  bool usable(std::uint32_t p);

  Representation rep_;
  std::vector<std::size_t> rational_ranks_;
  std::size_t rational_end_dim_ = 0;
  std::vector<std::uint32_t> usable_;
  std::vector<std::uint32_t> skipped_;
  std::uint32_t last_tested_ = 2;
  std::map<std::uint32_t, Representation> cache_;
};

inline constexpr int kHeldOutPrimes = 2;

struct EulerResult {
  Integer chi;
  CountingPolynomial polynomial;
  std::vector<std::uint32_t> skipped_primes;
};

/// chi(Gr_e(M)) as P(1), where P is the verified counting polynomial sampled
/// at the first D+3 usable primes, D = dimension_bound(dim M, e).
EulerResult euler_characteristic_detailed(const Representation& rep, const DimensionVector& e,
                                          const EnumerationOptions& options = {});
Integer euler_characteristic(const Representation& rep, const DimensionVector& e,
                             const EnumerationOptions& options = {});
/// Variant sharing a prime schedule (and its cached reductions) across calls.
EulerResult euler_characteristic_detailed(PrimeSchedule& schedule, const DimensionVector& d,
                                          const DimensionVector& e, const EnumerationOptions& options = {});

/// Point counts of Gr_e(M) for every target e, at the first
/// dimension_bound(d, e) + 3 usable primes; each prime is counted once for
/// all targets that need it.
std::vector<std::vector<CountSample>> sample_counts(PrimeSchedule& schedule, const DimensionVector& d,
                                                    const std::vector<DimensionVector>& targets,
                                                    const EnumerationOptions& options = {});
/// Interpolation step of euler_characteristic_detailed (skipped_primes left empty).
EulerResult euler_from_samples(std::span<const CountSample> samples, const DimensionVector& d,
                               const DimensionVector& e);

/// F_M = sum_e chi(Gr_e(M)) u^e over the box 0 <= e <= dim M.
FPolynomial f_polynomial(const Representation& rep, const EnumerationOptions& options = {});

}  // namespace quivergrass
