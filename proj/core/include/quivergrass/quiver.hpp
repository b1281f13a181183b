#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace quivergrass {

/// Arrow `source -> target`, 0-based vertex indices.
struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Directed multigraph on vertices 0..n-1. Loops and oriented 2-cycles are
/// accepted; `is_cluster_quiver()` reports whether there are none.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t num_vertices, std::vector<Arrow> arrows);

  /// Two vertices and `arrow_count` parallel arrows 0 -> 1.
  static Quiver kronecker(std::size_t arrow_count = 2);
  static Quiver one_vertex() { return Quiver(1, {}); }
  /// Linear A_n quiver with arrows i -> i+1.
  static Quiver linear(std::size_t num_vertices);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_arrows() const { return arrows_.size(); }

  bool has_loops() const { return has_loops_; }
  bool has_two_cycles() const { return has_two_cycles_; }
  bool is_cluster_quiver() const { return !has_loops_ && !has_two_cycles_; }
  bool is_acyclic() const { return topological_order().has_value(); }
  bool is_sink(std::size_t v) const;

  /// Kahn's algorithm with ascending-index tie-break; nullopt if there is an
  /// oriented cycle (including loops).
  std::optional<std::vector<std::size_t>> topological_order() const;

  /// All arrows reversed, same arrow order.
  Quiver opposite() const;

  std::string to_string() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Arrow> arrows_;
  bool has_loops_ = false;
  bool has_two_cycles_ = false;
};

/// Tuple of non-negative integers, one per vertex.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> entries);
  DimensionVector(std::initializer_list<int> entries)
      : DimensionVector(std::vector<int>(entries)) {}
  static DimensionVector zero(std::size_t n) { return DimensionVector(std::vector<int>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int total() const;
  bool is_zero() const;
  /// Componentwise 0 <= *this <= bound.
  bool fits_in(const DimensionVector& bound) const;

  std::string to_string() const;

  friend DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);
  /// Componentwise difference; throws OutOfRange when a component goes negative.
  friend DimensionVector operator-(const DimensionVector& a, const DimensionVector& b);
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Every e with 0 <= e <= bound, in lexicographic order.
std::vector<DimensionVector> box(const DimensionVector& bound);

/// Hereditary Euler form sum_i d_i e_i - sum_{a: j->i} d_j e_i.
/// Throws NotAcyclic.
long euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e);

}  // namespace quivergrass
