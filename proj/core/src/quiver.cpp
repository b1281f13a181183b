#include "quivergrass/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "quivergrass/error.hpp"

namespace quivergrass {

Quiver::Quiver(std::size_t num_vertices, std::vector<Arrow> arrows)
    : num_vertices_(num_vertices), arrows_(std::move(arrows)) {
  if (num_vertices_ == 0) throw Error(ErrorKind::invalid_argument, "quiver needs at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (arr.source >= num_vertices_ || arr.target >= num_vertices_) {
      throw Error(ErrorKind::out_of_range, "arrow " + std::to_string(a + 1) + " leaves the vertex set",
                  static_cast<std::int64_t>(a));
    }
    if (arr.source == arr.target) has_loops_ = true;
    seen.emplace(arr.source, arr.target);
  }
  for (const auto& [s, t] : seen) {
    if (s != t && seen.contains({t, s})) has_two_cycles_ = true;
  }
}

Quiver Quiver::kronecker(std::size_t arrow_count) {
  return Quiver(2, std::vector<Arrow>(arrow_count, Arrow{0, 1}));
}

Quiver Quiver::linear(std::size_t num_vertices) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < num_vertices; ++i) arrows.push_back({i, i + 1});
  return Quiver(num_vertices, std::move(arrows));
}

bool Quiver::is_sink(std::size_t v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

std::optional<std::vector<std::size_t>> Quiver::topological_order() const {
  std::vector<std::size_t> indegree(num_vertices_, 0);
  for (const Arrow& a : arrows_) ++indegree[a.target];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < num_vertices_; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Arrow& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
    }
  }
  if (order.size() != num_vertices_) return std::nullopt;
  return order;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  reversed.reserve(arrows_.size());
  for (const Arrow& a : arrows_) reversed.push_back({a.target, a.source});
  return Quiver(num_vertices_, std::move(reversed));
}

std::string Quiver::to_string() const {
  std::string s = "Quiver(" + std::to_string(num_vertices_) + "; ";
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (a) s += ", ";
    s += std::to_string(arrows_[a].source + 1) + "->" + std::to_string(arrows_[a].target + 1);
  }
  return s + ")";
}

DimensionVector::DimensionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_) {
    if (v < 0) throw Error(ErrorKind::out_of_range, "dimension vector entries must be non-negative");
  }
}

int DimensionVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DimensionVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool DimensionVector::fits_in(const DimensionVector& bound) const {
  if (bound.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > bound.entries_[i]) return false;
  return true;
}

std::string DimensionVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::out_of_range, "dimension vector length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return DimensionVector(std::move(out));
}

DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::out_of_range, "dimension vector length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return DimensionVector(std::move(out));
}

std::vector<DimensionVector> box(const DimensionVector& bound) {
  std::vector<DimensionVector> out;
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

long euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  if (!q.is_acyclic()) throw Error(ErrorKind::not_acyclic, "Euler form needs an acyclic quiver");
  if (d.size() != q.num_vertices() || e.size() != q.num_vertices()) {
    throw Error(ErrorKind::out_of_range, "dimension vector length differs from vertex count");
  }
  long value = 0;
  for (std::size_t i = 0; i < d.size(); ++i) value += long{d[i]} * e[i];
  for (const Arrow& a : q.arrows()) value -= long{d[a.source]} * e[a.target];
  return value;
}

}  // namespace quivergrass
