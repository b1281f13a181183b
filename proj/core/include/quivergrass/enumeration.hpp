#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/representation.hpp"
#include "quivergrass/scalar.hpp"
#include "quivergrass/subspace.hpp"

namespace quivergrass {

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

/// Number of e-dimensional subspaces of F_q^m. Zero outside 0 <= e <= m;
/// q == 1 throws DegenerateBase.
Integer gaussian_binomial(long m, long e, std::uint64_t q);

/// Streams every e-dimensional subspace of F_p^m exactly once, as its reduced
/// echelon basis, ordered by pivot set and then by free entries. Usage:
///   SubspaceStream s(p, m, e);
///   while (s.next()) use(s.current());
class SubspaceStream {
 public:
  SubspaceStream() = default;
  SubspaceStream(std::uint32_t p, std::size_t m, std::size_t e) { reset(p, m, e); }

  void reset(std::uint32_t p, std::size_t m, std::size_t e);
  bool next();

  const Matrix<std::uint32_t>& current() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  bool advance_pivots();
  void rebuild();

  std::uint32_t p_ = 2;
  std::size_t m_ = 0;
  std::size_t e_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  std::vector<std::uint32_t> odometer_;
  Matrix<std::uint32_t> basis_;
};

struct PointCount {
  std::uint32_t prime = 0;
  DimensionVector dim_vector;
  Integer count;
};

struct EnumerationOptions {
  /// Upper limit on candidate subspaces visited before SearchTooLarge.
  std::uint64_t cap = kDefaultCap;
  /// Workers splitting the outermost vertex's subspace stream.
  unsigned threads = 1;
};

/// Product of gaussian_binomial(d_i, e_i, p): the size of the ambient
/// product of Grassmannians.
Integer search_size_estimate(const DimensionVector& d, const DimensionVector& e, std::uint32_t p);

/// Exact number of F_p-points of Gr_e(M). `rep_mod_p` must be over a prime
/// field. An independent set of vertices (no arrows among them, no loops) is
/// counted in closed form: given the other subspaces, N_v ranges over the
/// subspaces between the forced image span and the preimage of the chosen
/// targets. The remaining vertices are visited in topological order
/// (ascending index for quivers with cycles), each one only ranging over
/// subspaces containing the images already forced on it.
/// Throws SearchTooLarge once more than `cap` candidates were visited.
PointCount count_subreps(const Representation& rep_mod_p, const DimensionVector& e,
                         const EnumerationOptions& options = {});

/// count_subreps for several dimension vectors at once; vectors that agree
/// outside the closed-form vertices share a single enumeration.
std::vector<PointCount> count_subreps_many(const Representation& rep_mod_p,
                                           const std::vector<DimensionVector>& targets,
                                           const EnumerationOptions& options = {});

/// Calls `visit` once per F_p-point of Gr_e(M) (single-threaded); returns
/// the number of points.
std::uint64_t for_each_subrep(const Representation& rep_mod_p, const DimensionVector& e,
                              const std::function<void(const SubspaceTuple&)>& visit,
                              const EnumerationOptions& options = {});

}  // namespace quivergrass
