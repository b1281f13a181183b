#include "quivergrass/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "quivergrass/error.hpp"
#include "quivergrass/modular.hpp"

namespace quivergrass {

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw Error(ErrorKind::out_of_range, "variable index out of range");
  Exponent e(num_vars, 0);
  e[var] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponent exp, const Integer& c) {
  Polynomial p(exp.size());
  p.add_term(exp, c);
  return p;
}

Integer Polynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Exponent& exp, const Integer& c) {
  if (exp.size() != num_vars_) {
    throw Error(ErrorKind::variable_count_mismatch, "exponent length differs from variable count");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [exp, c] : terms_) best = std::max(best, std::accumulate(exp.begin(), exp.end(), 0));
  return best;
}

bool Polynomial::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
  });
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != num_vars_) throw Error(ErrorKind::variable_count_mismatch, "evaluation point");
  Integer sum = 0;
  for (const auto& [exp, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(exp[i]));
      term *= power;
    }
    sum += term;
  }
  return sum;
}

std::uint32_t Polynomial::evaluate_mod(std::span<const std::uint32_t> point, std::uint32_t p) const {
  if (point.size() != num_vars_) throw Error(ErrorKind::variable_count_mismatch, "evaluation point");
  std::uint32_t sum = 0;
  for (const auto& [exp, c] : terms_) {
    Integer r = c % p;
    if (r < 0) r += p;
    std::uint32_t term = static_cast<std::uint32_t>(r.get_ui());
    for (std::size_t i = 0; i < num_vars_ && term != 0; ++i)
      term = mul_mod(term, pow_mod(point[i], static_cast<std::uint64_t>(exp[i]), p), p);
    sum = add_mod(sum, term, p);
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(num_vars_);
  for (const auto& [exp, c] : terms_) {
    if (exp[var] == 0) continue;
    Exponent e = exp;
    --e[var];
    out.add_term(e, c * exp[var]);
  }
  return out;
}

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw Error(ErrorKind::variable_count_mismatch,
                std::to_string(num_vars_) + " vs " + std::to_string(other.num_vars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [exp, c] : other.terms_) add_term(exp, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [exp, c] : sorted) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if (exp[i] > 1) mono += "^" + std::to_string(exp[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

FPolynomial f_poly_multiply(const FPolynomial& f, const FPolynomial& g) { return f * g; }

PolynomialMatrix multiply(const PolynomialMatrix& a, const PolynomialMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::shape_mismatch, "matrix product shape mismatch");
  const std::size_t vars = a.empty() ? 0 : a(0, 0).num_vars();
  PolynomialMatrix c(a.rows(), b.cols(), Polynomial(vars));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Polynomial determinant(const PolynomialMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::shape_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t vars = n == 0 ? 0 : m(0, 0).num_vars();
  if (n == 0) return Polynomial::constant(vars, 1);
  if (n == 1) return m(0, 0);
  // Laplace expansion along the first row; sizes here stay small.
  Polynomial det(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolynomialMatrix minor(n - 1, n - 1, Polynomial(vars));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Polynomial term = m(0, c) * determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace quivergrass
