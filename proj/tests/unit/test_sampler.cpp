#include <doctest.h>

#include <algorithm>

#include "quivergrass/euler.hpp"
#include "quivergrass/io.hpp"
#include "quivergrass/kronecker.hpp"
#include "quivergrass/sampler.hpp"

#include "check.hpp"

using namespace quivergrass;
using testing::kind_of;

namespace {

Representation example4_fixture() { return read_representation(std::string(QG_TEST_DATA) + "/example4.json"); }

Integer det_integer(std::vector<std::vector<Integer>> a) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<Integer>> image_columns(const Representation& rep, const std::vector<Integer>& v) {
  std::vector<std::vector<Integer>> m(4, std::vector<Integer>(4, 0));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) m[r][a] += rep.matrices()[a](r, c).to_rational().get_num() * v[c];
  return m;
}

std::size_t rank_mod(std::vector<std::vector<Integer>> m, std::uint32_t p) {
  std::vector<std::vector<long>> a;
  for (const auto& row : m) {
    std::vector<long> r;
    for (const auto& x : row) {
      Integer y = x % p;
      if (y < 0) y += p;
      r.push_back(y.get_si());
    }
    a.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a[0].size() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    long inv = 1;
    while (a[rank][c] * inv % p != 1) ++inv;
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const long f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("sampler") {
  TEST_CASE("general representations are reproducible") {
    const auto q = Quiver::kronecker(4);
    const auto a = sample_general_rep(q, {3, 4}, 42);
    CHECK(a.matrices() == sample_general_rep(q, {3, 4}, 42).matrices());
    CHECK_FALSE(a.matrices() == sample_general_rep(q, {3, 4}, 43).matrices());
    CHECK(a.matrices() == example4_fixture().matrices());
    for (const auto& m : a.matrices())
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const auto x = m(r, c).to_rational();
          CHECK(x >= -5);
          CHECK(x <= 5);
        }
    const auto empty = sample_general_rep(Quiver::linear(2), {0, 0}, 1);
    CHECK(empty.matrices()[0].rows() == 0);
    CHECK(kind_of([&] { sample_general_rep(q, {3, 4}, 1, 1); }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("tangent-space census") {
    const auto line = Representation::from_integers(Quiver::one_vertex(), {2}, {});
    const auto p1 = smoothness_probe(line, {1}, 7);
    CHECK(p1.points == 8);
    CHECK(p1.expected_dim == 1);
    CHECK(p1.smooth_consistent);
    CHECK(p1.tangent_dims == std::map<std::size_t, std::uint64_t>{{1, 8}});

    const auto pr3 = build_kronecker({KroneckerFamily::preprojective, 3, ProjectivePoint(0)});
    const auto r = smoothness_probe(pr3, {1, 2}, 5);
    CHECK(r.smooth_consistent);
    CHECK(r.points == 6);  // P^1 over F_5
    CHECK(r.to_json()["verdict"] == "smooth-consistent");

    const auto zero_e = smoothness_probe(pr3, {0, 0}, 3);
    CHECK(zero_e.points == 1);
    CHECK(zero_e.smooth_consistent);

    for (int m = 1; m <= 3; ++m)
      for (auto family : {KroneckerFamily::preprojective, KroneckerFamily::preinjective})
        for (std::uint32_t p : {3U, 5U}) {
          const auto rep = build_kronecker({family, m, ProjectivePoint(0)});
          for (const auto& e : box(rep.dims())) CHECK(smoothness_probe(rep, e, p).smooth_consistent);
        }

    // The zero representation of the 2-Kronecker quiver is not rigid; its
    // Grassmannian (1,1) is P^1 x P^1 of dimension 2 but <e, d-e> = -1.
    const auto zero = Representation::from_integers(Quiver::kronecker(), {2, 2},
                                                    {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    const auto bad = smoothness_probe(zero, {1, 1}, 3);
    CHECK_FALSE(bad.smooth_consistent);
    CHECK(bad.to_json()["verdict"] == "inconsistent");
  }

  TEST_CASE("the quartic of a (3,4) Kronecker representation") {
    const auto rep = example4_fixture();
    const auto f = example4_quartic(rep);
    CHECK(f.polynomial().is_homogeneous(4));

    // Direct integer determinant at a few points.
    for (const std::vector<Integer>& v : {std::vector<Integer>{1, 0, 0}, std::vector<Integer>{1, 2, 3},
                                          std::vector<Integer>{-2, 5, 1}, std::vector<Integer>{0, 1, -1}})
      CHECK(f.polynomial().evaluate(v) == det_integer(image_columns(rep, v)));

    // Homogeneity: f(t v) = t^4 f(v).
    const std::vector<Integer> v{3, -1, 2};
    CHECK(f.polynomial().evaluate(std::vector<Integer>{6, -2, 4}) == 16 * f.polynomial().evaluate(v));

    // f(v) = 0 mod p exactly when the four images of v span at most a
    // hyperplane, i.e. when span(v) is the first space of a subrepresentation
    // of dimension (1,3).
    for (std::uint32_t p : {5U, 7U}) {
      for (const auto& pt : projective_plane_points(p)) {
        const std::vector<Integer> w{pt[0], pt[1], pt[2]};
        CHECK((f.evaluate_mod(pt, p) == 0) == (rank_mod(image_columns(rep, w), p) <= 3));
      }
    }
    CHECK(projective_plane_points(5).size() == 31);
  }

  TEST_CASE("degenerate quartics are rejected") {
    const auto q = Quiver::kronecker(4);
    const std::vector<std::vector<long>> phi{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    const auto equal = Representation::from_integers(q, {3, 4}, {phi, phi, phi, phi});
    CHECK(kind_of([&] { example4_quartic(equal); }) == ErrorKind::degenerate_form);
    const std::vector<std::vector<long>> zero(4, std::vector<long>(3, 0));
    const auto with_zero = Representation::from_integers(
        q, {3, 4}, {phi, {{0, 1, 0}, {1, 0, 0}, {2, 0, 1}, {0, 0, 1}}, {{3, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 2, 0}}, zero});
    CHECK(kind_of([&] { example4_quartic(with_zero); }) == ErrorKind::degenerate_form);
    CHECK(kind_of([] { QuarticForm(Polynomial::variable(3, 0)); }) == ErrorKind::degenerate_form);
    CHECK(kind_of([] { example4_quartic(sample_general_rep(Quiver::kronecker(3), {3, 4}, 1)); }) ==
          ErrorKind::invalid_argument);
  }

  TEST_CASE("point-count witnesses") {
    const auto rep = example4_fixture();

    const auto bad = example4_witnesses(rep, {11, 5, 7});
    REQUIRE(bad.per_prime.size() == 3);
    CHECK(bad.per_prime[0].prime == 5);
    CHECK(bad.is_quartic);
    for (const auto& w : bad.per_prime) {
      CHECK(w.match);
      CHECK(w.rank_deficient_points.empty());
      CHECK(w.grassmannian_points == w.curve_points);
    }
    CHECK(bad.per_prime[0].smooth);
    CHECK_FALSE(bad.per_prime[1].smooth);  // reduction mod 7 acquires a node
    CHECK(bad.per_prime[1].singular_points.size() == 1);
    CHECK(bad.per_prime[2].smooth);
    CHECK_FALSE(bad.gates_passed());
    CHECK_FALSE(bad.chi.has_value());
    CHECK(bad.interpolation_non_polynomial);
    CHECK(kind_of([&] { example4_verify(rep, {5, 7, 11}); }) == ErrorKind::smoothness_failure);
    try {
      example4_verify(rep, {5, 7});
    } catch (const Error& e) {
      CHECK(e.detail() == 7);
    }

    const auto good = example4_verify(rep, {5, 11, 13});
    CHECK(good.gates_passed());
    CHECK(good.chi == -4);
    const auto j = good.to_json();
    CHECK(j["chi"] == -4);
    CHECK(j["is_quartic"] == true);

    CHECK_FALSE(example4_witnesses(rep, {}).chi.has_value());
  }

  TEST_CASE("positivity scans") {
    for (int m = 1; m <= 4; ++m)
      for (auto family : {KroneckerFamily::preprojective, KroneckerFamily::preinjective}) {
        const KroneckerKind kind{family, m, ProjectivePoint(0)};
        const auto report = positivity_scan(build_kronecker(kind), true);
        CHECK(report.rigid);
        CHECK(report.nonnegative());
        CHECK(report.entries.size() == box(kind.dims()).size());
        for (const auto& entry : report.entries) CHECK(entry.chi == kronecker_chi(kind, entry.e));
      }
    const auto simple = Representation::from_integers(Quiver::one_vertex(), {1}, {});
    CHECK(positivity_scan(simple, true).entries.size() == 2);

    const auto reg = build_kronecker({KroneckerFamily::regular, 2, ProjectivePoint(0)});
    CHECK(kind_of([&] { positivity_scan(reg, false); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { positivity_scan(build_kronecker({KroneckerFamily::regular, 1, ProjectivePoint(0)}), true); }) ==
          ErrorKind::invalid_argument);

    const auto rep = example4_fixture();
    const auto cert = example4_verify(rep, {5, 11, 13});
    const auto report = positivity_scan(rep, false, {}, &cert);
    CHECK_FALSE(report.rigid);
    CHECK(report.negative == std::vector<DimensionVector>{{1, 3}});
    const auto it = std::find_if(report.entries.begin(), report.entries.end(),
                                 [](const PositivityEntry& en) { return en.e == DimensionVector{1, 3}; });
    REQUIRE(it != report.entries.end());
    CHECK(it->refusal.has_value());
    CHECK(it->forwarded_chi == -4);
  }
}
