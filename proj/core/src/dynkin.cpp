#include "quivergrass/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "quivergrass/error.hpp"
#include "quivergrass/linalg.hpp"
#include "quivergrass/rng.hpp"

namespace quivergrass {

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Weight(std::move(c));
}

Weight operator-(const Weight& a, const Weight& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return Weight(std::move(c));
}

Weight operator*(int k, const Weight& a) {
  std::vector<int> c(a.coords());
  for (auto& x : c) x *= k;
  return Weight(std::move(c));
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> diagram_edges(DynkinType type, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (type) {
    case DynkinType::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case DynkinType::E:
      // Bourbaki labels 1-3-4-5-..-n with 2 attached to 4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

RootSystem::RootSystem(DynkinType type, std::size_t rank,
                       std::vector<std::pair<std::size_t, std::size_t>> edges)
    : type_(type), rank_(rank), edges_(std::move(edges)), cartan_(rank, rank, 0) {
  for (std::size_t i = 0; i < rank; ++i) cartan_(i, i) = 2;
  for (auto [a, b] : edges_) cartan_(a, b) = cartan_(b, a) = -1;

  // Close the simple roots under reflections (root coordinates).
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<int> r(rank, 0);
    r[i] = 1;
    if (roots.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < rank; ++j) pairing += cartan_(i, j) * beta[j];
      if (pairing == 0) continue;
      auto image = beta;
      image[i] -= pairing;
      if (roots.insert(image).second) queue.push_back(image);
    }
  }
  for (const auto& r : roots)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) positive_roots_.push_back(r);
}

RootSystem RootSystem::make(DynkinType type, std::size_t rank) {
  bool ok = false;
  switch (type) {
    case DynkinType::A: ok = rank >= 1; break;
    case DynkinType::D: ok = rank >= 4; break;
    case DynkinType::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw Error(ErrorKind::invalid_argument, "no simply-laced diagram of that type and rank");
  return RootSystem(type, rank, diagram_edges(type, rank));
}

RootSystem RootSystem::parse(const std::string& label) {
  if (label.size() < 2) throw Error(ErrorKind::parse_error, "bad Dynkin label '" + label + "'");
  DynkinType type;
  switch (label[0]) {
    case 'A': case 'a': type = DynkinType::A; break;
    case 'D': case 'd': type = DynkinType::D; break;
    case 'E': case 'e': type = DynkinType::E; break;
    default: throw Error(ErrorKind::parse_error, "bad Dynkin label '" + label + "'");
  }
  std::size_t rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9' || rank > 1000)
      throw Error(ErrorKind::parse_error, "bad Dynkin label '" + label + "'");
    rank = rank * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  return make(type, rank);
}

std::string RootSystem::label() const {
  const char letter = type_ == DynkinType::A ? 'A' : type_ == DynkinType::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

bool RootSystem::is_positive_root(const std::vector<int>& root) const {
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), root);
}

Weight RootSystem::simple_root(std::size_t i) const {
  std::vector<int> c(rank_);
  for (std::size_t j = 0; j < rank_; ++j) c[j] = cartan_(j, i);
  return Weight(std::move(c));
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  std::vector<int> c(rank_, 0);
  c.at(i) = 1;
  return Weight(std::move(c));
}

Weight RootSystem::root_to_weight(const std::vector<int>& root) const {
  if (root.size() != rank_) throw Error(ErrorKind::out_of_range, "root has wrong length");
  std::vector<int> c(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) c[i] += cartan_(i, j) * root[j];
  return Weight(std::move(c));
}

CoxeterWord::CoxeterWord(std::vector<std::size_t> letters) : letters_(std::move(letters)) {
  std::vector<bool> seen(letters_.size(), false);
  for (auto v : letters_) {
    if (v >= letters_.size() || seen[v])
      throw Error(ErrorKind::invalid_argument, "Coxeter word must use every vertex exactly once");
    seen[v] = true;
  }
}

CoxeterWord CoxeterWord::from_one_based(const std::vector<int>& letters) {
  std::vector<std::size_t> zero_based;
  for (int v : letters) {
    if (v < 1) throw Error(ErrorKind::invalid_argument, "Coxeter letters are 1-based");
    zero_based.push_back(static_cast<std::size_t>(v - 1));
  }
  return CoxeterWord(std::move(zero_based));
}

std::string CoxeterWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? "," : "") << letters_[k] + 1;
  return os.str();
}

Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& lambda) {
  if (lambda.size() != rs.rank() || i >= rs.rank())
    throw Error(ErrorKind::out_of_range, "weight or index does not fit the root system");
  return lambda - lambda[i] * rs.simple_root(i);
}

Weight apply_coxeter_inverse(const RootSystem& rs, const CoxeterWord& c, const Weight& lambda) {
  Weight w = lambda;
  for (auto i : c.letters()) w = simple_reflection(rs, i, w);
  return w;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (w[i] == 0) continue;
      Weight image = simple_reflection(rs, i, w);
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

Quiver orientation_from_coxeter(const RootSystem& rs, const CoxeterWord& c) {
  if (c.size() != rs.rank()) throw Error(ErrorKind::invalid_argument, "Coxeter word length differs from rank");
  std::vector<std::size_t> position(rs.rank());
  for (std::size_t k = 0; k < c.size(); ++k) position[c.letters()[k]] = k;
  std::vector<Arrow> arrows;
  for (auto [a, b] : rs.edges()) {
    if (position[a] < position[b])
      arrows.push_back({b, a});
    else
      arrows.push_back({a, b});
  }
  return Quiver(rs.rank(), std::move(arrows));
}

CoxeterWord coxeter_from_orientation(const RootSystem& rs, const Quiver& q) {
  const std::size_t n = rs.rank();
  if (q.num_vertices() != n || q.num_arrows() != rs.edges().size())
    throw Error(ErrorKind::not_an_orientation, "quiver is not an orientation of " + rs.label());
  std::vector<std::pair<std::size_t, std::size_t>> underlying;
  for (const auto& a : q.arrows())
    underlying.emplace_back(std::min(a.source, a.target), std::max(a.source, a.target));
  std::sort(underlying.begin(), underlying.end());
  if (underlying != rs.edges())
    throw Error(ErrorKind::not_an_orientation, "quiver is not an orientation of " + rs.label());

  std::vector<std::size_t> letters;
  std::vector<bool> emitted(n, false);
  while (letters.size() < n) {
    bool progressed = false;
    for (std::size_t v = 0; v < n && !progressed; ++v) {
      if (emitted[v]) continue;
      bool ready = std::all_of(q.arrows().begin(), q.arrows().end(),
                               [&](const Arrow& a) { return a.source != v || emitted[a.target]; });
      if (ready) {
        emitted[v] = true;
        letters.push_back(v);
        progressed = true;
      }
    }
    if (!progressed) throw Error(ErrorKind::not_an_orientation, "quiver has an oriented cycle");
  }
  return CoxeterWord(std::move(letters));
}

Matrix<int> coxeter_inverse_minus_identity(const RootSystem& rs, const CoxeterWord& c) {
  const std::size_t n = rs.rank();
  Matrix<int> m(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Weight image = apply_coxeter_inverse(rs, c, rs.fundamental_weight(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = image[i] - (i == j ? 1 : 0);
  }
  return m;
}

GammaSolution solve_gamma(const RootSystem& rs, const CoxeterWord& c, const std::vector<int>& root) {
  if (!rs.is_positive_root(root))
    throw Error(ErrorKind::out_of_range, "not a positive root of " + rs.label());
  const std::size_t n = rs.rank();
  Matrix<int> a = coxeter_inverse_minus_identity(rs, c);
  Weight alpha = rs.root_to_weight(root);

  RationalField field;
  Matrix<Rational> aq = map_entries(a, [](int x) { return Rational(x); });
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = alpha[i];
  auto x = solve_square(aq, b, field);
  if (!x) throw Error(ErrorKind::singular_system, "c^{-1} - 1 is singular on the weight lattice");

  std::vector<int> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((*x)[i].get_den() != 1)
      throw Error(ErrorKind::not_in_any_fundamental_orbit, "gamma is not an integral weight");
    coords[i] = static_cast<int>((*x)[i].get_num().get_si());
  }
  Weight gamma(std::move(coords));

  for (std::size_t i = 0; i < n; ++i) {
    auto orbit = weyl_orbit(rs, rs.fundamental_weight(i));
    if (std::binary_search(orbit.begin(), orbit.end(), gamma)) return {gamma, i};
  }
  throw Error(ErrorKind::not_in_any_fundamental_orbit,
              "gamma = " + gamma.to_string() + " lies in no orbit of a fundamental weight");
}

PolynomialMatrix x_matrix(std::size_t n, std::size_t i, const Polynomial& u) {
  const std::size_t vars = u.num_vars();
  auto m = PolynomialMatrix::identity(n + 1, Polynomial(vars), Polynomial::constant(vars, 1));
  m(i, i + 1) = u;
  return m;
}

PolynomialMatrix y_matrix(std::size_t n, std::size_t i, const Polynomial& u) {
  const std::size_t vars = u.num_vars();
  auto m = PolynomialMatrix::identity(n + 1, Polynomial(vars), Polynomial::constant(vars, 1));
  m(i + 1, i) = u;
  return m;
}

std::pair<PolynomialMatrix, PolynomialMatrix> elementary_matrices_A(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorKind::out_of_range, "index exceeds rank");
  return {x_matrix(n, i, Polynomial::variable(n, i)), y_matrix(n, i, Polynomial::constant(n, 1))};
}

std::vector<std::size_t> extreme_weight_subset_A(std::size_t n, std::size_t i, const Weight& gamma) {
  if (gamma.size() != n || i >= n) throw Error(ErrorKind::out_of_range, "weight does not fit A_n");
  // epsilon coordinates: omega_k = e_1 + ... + e_k, modulo (1, ..., 1).
  std::vector<int> eps(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) eps[j] = eps[j + 1] + gamma[j];
  const int low = *std::min_element(eps.begin(), eps.end());
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j <= n; ++j) {
    const int x = eps[j] - low;
    if (x > 1) break;
    if (x == 1) subset.push_back(j);
  }
  const bool extreme = subset.size() == i + 1 &&
                       std::all_of(eps.begin(), eps.end(), [&](int x) { return x - low <= 1; });
  if (!extreme)
    throw Error(ErrorKind::weight_not_extreme,
                gamma.to_string() + " is not in the orbit of omega_" + std::to_string(i + 1));
  return subset;
}

Polynomial generalized_minor_A(std::size_t n, std::size_t i, const Weight& gamma, const PolynomialMatrix& x) {
  if (x.rows() != n + 1 || x.cols() != n + 1)
    throw Error(ErrorKind::shape_mismatch, "matrix is not (n+1)x(n+1)");
  auto subset = extreme_weight_subset_A(n, i, gamma);
  const std::size_t vars = x(0, 0).num_vars();
  PolynomialMatrix sub(subset.size(), subset.size(), Polynomial(vars));
  for (std::size_t r = 0; r < subset.size(); ++r)
    for (std::size_t c = 0; c < subset.size(); ++c) sub(r, c) = x(subset[r], subset[c]);
  return determinant(sub);
}

FPolynomial f_polynomial_via_minor(const RootSystem& rs, const CoxeterWord& c, const std::vector<int>& root) {
  if (rs.type() != DynkinType::A)
    throw Error(ErrorKind::out_of_scope, "generalized minors are implemented for type A only");
  const std::size_t n = rs.rank();
  if (c.size() != n) throw Error(ErrorKind::invalid_argument, "Coxeter word length differs from rank");
  auto solution = solve_gamma(rs, c, root);

  auto product = PolynomialMatrix::identity(n + 1, Polynomial(n), Polynomial::constant(n, 1));
  for (auto i : c.letters()) product = multiply(product, elementary_matrices_A(n, i).second);
  for (auto it = c.letters().rbegin(); it != c.letters().rend(); ++it)
    product = multiply(product, elementary_matrices_A(n, *it).first);
  return generalized_minor_A(n, solution.fundamental_index, solution.gamma, product);
}

Representation dynkin_indecomposable(const Quiver& q, const std::vector<int>& root, std::uint64_t seed,
                                     std::size_t max_samples) {
  DimensionVector dims(root);
  if (dims.size() != q.num_vertices()) throw Error(ErrorKind::out_of_range, "root has wrong length");
  SeededRng rng(seed);
  for (std::size_t sample = 0; sample < max_samples; ++sample) {
    std::vector<Matrix<Scalar>> matrices;
    for (const auto& a : q.arrows()) {
      Matrix<Scalar> m(static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = Scalar(static_cast<long>(rng.draw(-3, 3)));
      matrices.push_back(std::move(m));
    }
    Representation rep(q, dims, std::move(matrices));
    if (hom_dim(rep, rep) == 1 && ext1_dim(rep) == 0) return rep;
  }
  throw Error(ErrorKind::search_exhausted,
              "no indecomposable of dimension " + dims.to_string() + " found in " + std::to_string(max_samples) +
                  " samples");
}

}  // namespace quivergrass
