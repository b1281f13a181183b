#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/representation.hpp"

namespace quivergrass {

/// Subspace of F_p^m stored as its reduced row echelon basis (rows are basis
/// vectors). Equal subspaces have identical bases.
class Subspace {
 public:
  /// Span of the rows of `generators`.
  static Subspace span(std::uint32_t p, std::size_t ambient_dim, const Matrix<std::uint32_t>& generators);
  static Subspace zero(std::uint32_t p, std::size_t ambient_dim);
  static Subspace full(std::uint32_t p, std::size_t ambient_dim);
  /// Adopts a basis that is already reduced echelon with full row rank;
  /// throws InvalidArgument otherwise.
  static Subspace from_echelon(std::uint32_t p, Matrix<std::uint32_t> basis);

  std::uint32_t prime() const { return prime_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<std::uint32_t>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// `v` minus its projection onto the pivot coordinates; zero iff v is in
  /// the subspace.
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;
  bool contains(std::span<const std::uint32_t> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::uint32_t p, std::size_t ambient, Matrix<std::uint32_t> basis, std::vector<std::size_t> pivots)
      : prime_(p), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::uint32_t prime_ = 0;
  std::size_t ambient_ = 0;
  Matrix<std::uint32_t> basis_;
  std::vector<std::size_t> pivots_;
};

/// One subspace per vertex, all over the same prime field.
struct SubspaceTuple {
  std::uint32_t prime = 0;
  std::vector<Subspace> spaces;

  DimensionVector dims() const;
  friend bool operator==(const SubspaceTuple&, const SubspaceTuple&) = default;
};

SubspaceTuple zero_tuple(const Representation& rep_mod_p);
SubspaceTuple full_tuple(const Representation& rep_mod_p);

/// True iff every arrow maps N_source into N_target. The representation must
/// be over F_p with p == n.prime (DomainMismatch otherwise).
bool is_subrepresentation(const Representation& rep_mod_p, const SubspaceTuple& n);

/// The subrepresentation N with its maps written in the echelon bases.
Representation sub_representation(const Representation& rep_mod_p, const SubspaceTuple& n);

/// M/N, with M_v/N_v identified with the non-pivot coordinates of N_v.
Representation quotient_representation(const Representation& rep_mod_p, const SubspaceTuple& n);

}  // namespace quivergrass
