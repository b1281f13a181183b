#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/polynomial.hpp"
#include "quivergrass/quiver.hpp"
#include "quivergrass/representation.hpp"

namespace quivergrass {

enum class DynkinType { A, D, E };

/// Integer coordinates in the basis of fundamental weights.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  std::string to_string() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coords_;
};

/// Simply-laced root system of type A_n, D_n or E_{6,7,8}. Vertices are
/// 0-based internally; roots are coordinate vectors in the simple-root basis.
class RootSystem {
 public:
  static RootSystem make(DynkinType type, std::size_t rank);
  /// "A3", "D4", "E6".
  static RootSystem parse(const std::string& label);

  DynkinType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string label() const;

  const Matrix<int>& cartan() const { return cartan_; }
  /// Diagram edges (i, j), i < j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  bool is_positive_root(const std::vector<int>& root) const;

  /// alpha_i written in fundamental weights: column i of the Cartan matrix.
  Weight simple_root(std::size_t i) const;
  Weight fundamental_weight(std::size_t i) const;
  /// sum_j root[j] alpha_j in fundamental-weight coordinates.
  Weight root_to_weight(const std::vector<int>& root) const;

 private:
  RootSystem(DynkinType type, std::size_t rank, std::vector<std::pair<std::size_t, std::size_t>> edges);

  DynkinType type_;
  std::size_t rank_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  Matrix<int> cartan_;
  std::vector<std::vector<int>> positive_roots_;
};

/// c = s_{i_1} ... s_{i_n}: every vertex exactly once.
class CoxeterWord {
 public:
  /// 0-based letters; throws InvalidArgument unless a permutation of 0..n-1.
  explicit CoxeterWord(std::vector<std::size_t> letters);
  /// 1-based letters as written on the command line.
  static CoxeterWord from_one_based(const std::vector<int>& letters);

  const std::vector<std::size_t>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string to_string() const;

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;

 private:
  std::vector<std::size_t> letters_;
};

/// s_i(lambda) = lambda - lambda_i alpha_i.
Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& lambda);

/// c^{-1}(lambda) = s_{i_n} ... s_{i_1}(lambda).
Weight apply_coxeter_inverse(const RootSystem& rs, const CoxeterWord& c, const Weight& lambda);

/// Orbit W.lambda by breadth-first search over simple reflections.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

/// Edge {i_k, i_l} with k < l becomes the arrow i_l -> i_k.
Quiver orientation_from_coxeter(const RootSystem& rs, const CoxeterWord& c);

/// Inverse bijection: a linear extension in which every arrow's target
/// precedes its source, smallest index first. Throws NotAnOrientation.
CoxeterWord coxeter_from_orientation(const RootSystem& rs, const Quiver& q);

struct GammaSolution {
  Weight gamma;
  std::size_t fundamental_index = 0;  // gamma lies in W.omega_i
};

/// The unique gamma with c^{-1} gamma - gamma = alpha, and the fundamental
/// weight whose orbit contains it. Throws SingularSystem,
/// NotInAnyFundamentalOrbit, OutOfRange (alpha not a positive root).
GammaSolution solve_gamma(const RootSystem& rs, const CoxeterWord& c, const std::vector<int>& root);

/// Matrix of c^{-1} on weights (columns are images of omega_j) minus the identity.
Matrix<int> coxeter_inverse_minus_identity(const RootSystem& rs, const CoxeterWord& c);

/// Type A_n in (n+1)x(n+1) matrices over Z[u_1..u_n]:
/// x_i(u) = Id + u E_{i,i+1},  y_i(u) = Id + u E_{i+1,i}  (i 0-based).
PolynomialMatrix x_matrix(std::size_t n, std::size_t i, const Polynomial& u);
PolynomialMatrix y_matrix(std::size_t n, std::size_t i, const Polynomial& u);
/// {x_i(u_i), y_i(1)}.
std::pair<PolynomialMatrix, PolynomialMatrix> elementary_matrices_A(std::size_t n, std::size_t i);

/// Index set J (0-based, ascending) of the weight vector e_J of the i-th
/// exterior power of C^{n+1} with weight gamma. Throws WeightNotExtreme.
std::vector<std::size_t> extreme_weight_subset_A(std::size_t n, std::size_t i, const Weight& gamma);

/// Principal generalized minor Delta_{gamma,gamma}(x) for type A_n: the
/// minor of x on rows and columns J.
Polynomial generalized_minor_A(std::size_t n, std::size_t i, const Weight& gamma, const PolynomialMatrix& x);

/// Delta_{gamma,gamma}(y_{i_1}(1) ... y_{i_n}(1) x_{i_n}(u_{i_n}) ... x_{i_1}(u_{i_1})).
/// Type A only (OutOfScope otherwise).
FPolynomial f_polynomial_via_minor(const RootSystem& rs, const CoxeterWord& c, const std::vector<int>& root);

/// Indecomposable representation of dimension vector `root` on the Dynkin
/// quiver q: seeded random integer matrices until hom(M,M) = 1 and
/// ext^1(M,M) = 0 over Q. Throws SearchExhausted.
Representation dynkin_indecomposable(const Quiver& q, const std::vector<int>& root, std::uint64_t seed = 1,
                                     std::size_t max_samples = 200);

}  // namespace quivergrass
