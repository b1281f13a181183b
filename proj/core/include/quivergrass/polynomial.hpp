#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/scalar.hpp"

namespace quivergrass {

using Exponent = std::vector<int>;

/// Sparse polynomial with integer coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c);
  /// The variable with 0-based index `var`.
  static Polynomial variable(std::size_t num_vars, std::size_t var);
  static Polynomial monomial(Exponent exp, const Integer& c);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& exp) const;
  void add_term(const Exponent& exp, const Integer& c);

  int total_degree() const;
  /// True when every term has total degree `d`.
  bool is_homogeneous(int d) const;

  Integer evaluate(std::span<const Integer> point) const;
  std::uint32_t evaluate_mod(std::span<const std::uint32_t> point, std::uint32_t p) const;
  Polynomial derivative(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form: terms by total degree, then with larger exponents
  /// of lower-indexed variables first ("1 + u1 + u2 + u1*u2").
  std::string to_string(const std::string& var_prefix = "u") const;

 private:
  void require_same_vars(const Polynomial& other) const;

  std::size_t num_vars_;
  std::map<Exponent, Integer> terms_;
};

/// The generating polynomial of Euler characteristics; variables u_1..u_n.
using FPolynomial = Polynomial;

/// Exact product F*G; throws VariableCountMismatch.
FPolynomial f_poly_multiply(const FPolynomial& f, const FPolynomial& g);

using PolynomialMatrix = Matrix<Polynomial>;

PolynomialMatrix multiply(const PolynomialMatrix& a, const PolynomialMatrix& b);
/// Cofactor expansion; meant for the small matrices used here.
Polynomial determinant(const PolynomialMatrix& m);

}  // namespace quivergrass
