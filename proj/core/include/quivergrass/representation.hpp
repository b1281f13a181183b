#pragma once

#include <cstdint>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/quiver.hpp"
#include "quivergrass/scalar.hpp"

namespace quivergrass {

/// Quiver representation: a space of dimension dims[v] per vertex and a
/// dims[target] x dims[source] matrix per arrow, entries in one exact domain.
/// Construction does not validate; see validate_representation.
class Representation {
 public:
  Representation(Quiver quiver, DimensionVector dims, std::vector<Matrix<Scalar>> matrices,
                 ScalarDomain domain = ScalarDomain::integers());

  static Representation zero(const Quiver& quiver, ScalarDomain domain = ScalarDomain::integers());
  /// One-dimensional space at `vertex`, zero elsewhere.
  static Representation simple(const Quiver& quiver, std::size_t vertex,
                               ScalarDomain domain = ScalarDomain::integers());
  /// Convenience constructor for integer matrices given as nested lists.
  static Representation from_integers(Quiver quiver, DimensionVector dims,
                                      const std::vector<std::vector<std::vector<long>>>& matrices);

  const Quiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  const ScalarDomain& domain() const { return domain_; }
  const std::vector<Matrix<Scalar>>& matrices() const { return matrices_; }
  const Matrix<Scalar>& matrix(std::size_t arrow) const { return matrices_.at(arrow); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  DimensionVector dims_;
  std::vector<Matrix<Scalar>> matrices_;
  ScalarDomain domain_;
};

/// Throws ShapeMismatch (detail = 0-based arrow index) or MixedScalarDomains.
void validate_representation(const Representation& rep);

/// Block-diagonal sum. Throws QuiverMismatch or MixedScalarDomains.
Representation direct_sum(const Representation& a, const Representation& b);

/// Transposed matrices on the opposite quiver.
Representation dual_representation(const Representation& rep);

/// Entries reduced into F_p. Throws DomainMismatch if a denominator vanishes
/// mod p or the representation already lives over another prime.
Representation reduce_mod(const Representation& rep, std::uint32_t p);

/// Same values re-tagged as rationals (integer and rational inputs only).
Representation to_rationals(const Representation& rep);

std::vector<Matrix<Rational>> rational_matrices(const Representation& rep);
std::vector<Matrix<std::uint32_t>> mod_matrices(const Representation& rep, std::uint32_t p);

/// Rank of every arrow matrix over Q (integer/rational reps) or F_p.
std::vector<std::size_t> matrix_ranks(const Representation& rep);

/// Dimension of the space of intertwiners A -> B, over Q for integer and
/// rational representations and over F_p for prime-field ones.
std::size_t hom_dim(const Representation& a, const Representation& b);

/// hom(A,A) - <dim A, dim A>; throws NotAcyclic.
std::size_t ext1_dim(const Representation& rep);
bool is_rigid(const Representation& rep);

}  // namespace quivergrass
