#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/modular.hpp"
#include "quivergrass/scalar.hpp"

namespace quivergrass {

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t prime() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return add_mod(a, b, p_); }
  value_type sub(value_type a, value_type b) const { return sub_mod(a, b, p_); }
  value_type mul(value_type a, value_type b) const { return mul_mod(a, b, p_); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const { return inv_mod(a, p_); }

 private:
  std::uint32_t p_;
};

/// Brings `m` to reduced row echelon form in place (zero rows last) and
/// returns the pivot column of each nonzero row.
template <typename Field>
std::vector<std::size_t> row_reduce(Matrix<typename Field::value_type>& m, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(lead, c));
    auto inv = f.inv(m(lead, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) = f.mul(m(lead, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead, c)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

template <typename Field>
std::size_t rank(Matrix<typename Field::value_type> m, const Field& f) {
  return row_reduce(m, f).size();
}

template <typename Field>
Matrix<typename Field::value_type> multiply(const Matrix<typename Field::value_type>& a,
                                            const Matrix<typename Field::value_type>& b,
                                            const Field& f) {
  Matrix<typename Field::value_type> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Unique solution x of A x = b for square invertible A, or nullopt when A
/// is singular.
template <typename Field>
std::optional<std::vector<typename Field::value_type>> solve_square(
    const Matrix<typename Field::value_type>& a,
    const std::vector<typename Field::value_type>& b, const Field& f) {
  const std::size_t n = a.rows();
  Matrix<typename Field::value_type> aug(n, n + 1, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = row_reduce(aug, f);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<typename Field::value_type> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

}  // namespace quivergrass
