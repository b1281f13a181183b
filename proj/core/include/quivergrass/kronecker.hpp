#pragma once

#include <string>

#include "quivergrass/quiver.hpp"
#include "quivergrass/representation.hpp"
#include "quivergrass/scalar.hpp"

namespace quivergrass {

/// Binomial coefficient via the falling factorial: n(n-1)...(n-k+1)/k! for
/// k >= 0 (any integer n), and 0 for k < 0.
Integer binom_ext(const Integer& n, long k);

/// chi of the ordinary Grassmannian Gr_e(C^m): binom(m, e), 0 outside 0..m.
Integer ordinary_grassmannian_chi(long m, long e);

enum class KroneckerFamily { preprojective, preinjective, regular };

/// A point of P^1: a rational number or infinity.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Rational value = 0) : value_(std::move(value)) { value_.canonicalize(); }
  static ProjectivePoint infinity();
  /// "inf" or a rational such as "3" or "-1/2".
  static ProjectivePoint parse(const std::string& text);

  bool is_infinity() const { return infinite_; }
  const Rational& value() const { return value_; }
  std::string to_string() const;

 private:
  Rational value_;
  bool infinite_ = false;
};

/// Indecomposable representation of the Kronecker quiver (arrows 1 -> 2):
/// preprojective dims (m-1, m), preinjective (m, m-1), regular (m, m).
struct KroneckerKind {
  KroneckerFamily family = KroneckerFamily::preprojective;
  int m = 1;
  ProjectivePoint lambda;  // regular family only

  DimensionVector dims() const;
  std::string to_string() const;
};

KroneckerFamily parse_kronecker_family(const std::string& text);

/// Closed-form chi(Gr_e(M)) for the Kronecker indecomposables:
///   preprojective  binom(m-e1, e2-e1) binom(e2-1, e1)
///   preinjective   binom(e2+1, e2-e1+1) binom(m-e1-1, m-e2-1)
///   regular        binom(m-e1, e2-e1) binom(e2, e1)   (independent of lambda)
/// The preinjective line is the preprojective one transported by duality
/// (Gr_e(M*) = Gr_{d-e}(M)) with the two vertices swapped. Throws OutOfRange
/// unless 0 <= e <= dims.
Integer kronecker_chi(const KroneckerKind& kind, const DimensionVector& e);

/// Explicit integer (or rational, for non-integral lambda) matrices.
Representation build_kronecker(const KroneckerKind& kind);

}  // namespace quivergrass
