#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quivergrass/dynkin.hpp"
#include "quivergrass/euler.hpp"

#include "check.hpp"

using namespace quivergrass;
using testing::kind_of;

namespace {

std::vector<CoxeterWord> all_words(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<CoxeterWord> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Quiver> all_orientations(const RootSystem& rs) {
  std::vector<Quiver> out;
  const auto& edges = rs.edges();
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      arrows.push_back((mask >> k) & 1 ? Arrow{a, b} : Arrow{b, a});
    }
    out.emplace_back(rs.rank(), std::move(arrows));
  }
  return out;
}

std::vector<Arrow> sorted_arrows(const Quiver& q) {
  auto a = q.arrows();
  std::sort(a.begin(), a.end(), [](const Arrow& x, const Arrow& y) {
    return std::pair(x.source, x.target) < std::pair(y.source, y.target);
  });
  return a;
}

// Independent membership test: reflect into the dominant chamber and compare.
Weight dominant(const RootSystem& rs, Weight w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (w[i] < 0) {
        w = simple_reflection(rs, i, w);
        changed = true;
      }
    }
  }
  return w;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TEST_SUITE("dynkin") {
  TEST_CASE("positive roots") {
    for (std::size_t n = 1; n <= 7; ++n) CHECK(RootSystem::make(DynkinType::A, n).positive_roots().size() == n * (n + 1) / 2);
    for (std::size_t n = 4; n <= 7; ++n) CHECK(RootSystem::make(DynkinType::D, n).positive_roots().size() == n * (n - 1));
    CHECK(RootSystem::parse("E6").positive_roots().size() == 36);
    CHECK(RootSystem::parse("E7").positive_roots().size() == 63);
    CHECK(RootSystem::parse("E8").positive_roots().size() == 120);
    CHECK(RootSystem::parse("E8").label() == "E8");

    const auto a3 = RootSystem::parse("A3");
    CHECK(a3.is_positive_root({1, 1, 1}));
    CHECK_FALSE(a3.is_positive_root({1, 0, 1}));
    const auto d4 = RootSystem::parse("D4");
    CHECK(d4.is_positive_root({1, 2, 1, 1}));
    CHECK_FALSE(d4.is_positive_root({1, 2, 2, 1}));

    CHECK(kind_of([] { RootSystem::parse("F4"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { RootSystem::parse("D3"); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { RootSystem::parse("E9"); }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("Cartan matrices are symmetric with one edge per off-diagonal pair") {
    for (const char* label : {"A4", "D5", "E6", "E7", "E8"}) {
      const auto rs = RootSystem::parse(label);
      const auto& c = rs.cartan();
      std::size_t minus_ones = 0;
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        CHECK(c(i, i) == 2);
        for (std::size_t j = 0; j < rs.rank(); ++j) {
          CHECK(c(i, j) == c(j, i));
          if (c(i, j) == -1) ++minus_ones;
        }
      }
      CHECK(minus_ones == 2 * rs.edges().size());
      CHECK(rs.edges().size() == rs.rank() - 1);
    }
  }

  TEST_CASE("simple reflections are involutions") {
    std::mt19937 rng(3);
    for (const char* label : {"A3", "D4", "E6"}) {
      const auto rs = RootSystem::parse(label);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> coords(rs.rank());
        for (auto& x : coords) x = static_cast<int>(rng() % 7) - 3;
        const Weight w(coords);
        for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(simple_reflection(rs, i, simple_reflection(rs, i, w)) == w);
      }
      for (std::size_t i = 0; i < rs.rank(); ++i)
        CHECK(simple_reflection(rs, i, rs.simple_root(i)) == -1 * rs.simple_root(i));
    }
  }

  TEST_CASE("fundamental orbits of A_n have binomial size") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto rs = RootSystem::make(DynkinType::A, n);
      for (std::size_t i = 0; i < n; ++i) CHECK(weyl_orbit(rs, rs.fundamental_weight(i)).size() == binomial(n + 1, i + 1));
    }
    CHECK(weyl_orbit(RootSystem::parse("E6"), RootSystem::parse("E6").fundamental_weight(0)).size() == 27);
  }

  TEST_CASE("Coxeter words and orientations") {
    for (const char* label : {"A1", "A3", "A4", "D4", "D5", "E6"}) {
      const auto rs = RootSystem::parse(label);
      for (const auto& q : all_orientations(rs)) {
        const auto c = coxeter_from_orientation(rs, q);
        CHECK(sorted_arrows(orientation_from_coxeter(rs, c)) == sorted_arrows(q));
      }
    }
    const auto a3 = RootSystem::parse("A3");
    for (const auto& c : all_words(3)) {
      const auto q = orientation_from_coxeter(a3, c);
      CHECK(sorted_arrows(orientation_from_coxeter(a3, coxeter_from_orientation(a3, q))) == sorted_arrows(q));
    }
    // c = s_1 s_2 s_3 puts every arrow from the later letter to the earlier one.
    CHECK(sorted_arrows(orientation_from_coxeter(a3, CoxeterWord::from_one_based({1, 2, 3}))) ==
          std::vector<Arrow>{{1, 0}, {2, 1}});
    CHECK(CoxeterWord::from_one_based({2, 1, 3}).to_string() == "2,1,3");

    CHECK(kind_of([] { CoxeterWord({0, 0, 1}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { CoxeterWord::from_one_based({0, 1}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { coxeter_from_orientation(a3, Quiver(3, {{0, 1}, {1, 0}})); }) ==
          ErrorKind::not_an_orientation);
    CHECK(kind_of([&] { coxeter_from_orientation(a3, Quiver(3, {{0, 2}, {1, 2}})); }) ==
          ErrorKind::not_an_orientation);
  }

  TEST_CASE("gamma solves the twisted equation and lies in a fundamental orbit") {
    for (const char* label : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
      const auto rs = RootSystem::parse(label);
      const auto words = rs.rank() <= 4 ? all_words(rs.rank()) : std::vector<CoxeterWord>{CoxeterWord(
                                                                      [&] {
                                                                        std::vector<std::size_t> p(rs.rank());
                                                                        std::iota(p.begin(), p.end(), 0);
                                                                        return p;
                                                                      }())};
      for (const auto& c : words) {
        for (const auto& root : rs.positive_roots()) {
          const auto sol = solve_gamma(rs, c, root);
          CHECK(apply_coxeter_inverse(rs, c, sol.gamma) - sol.gamma == rs.root_to_weight(root));
          CHECK(dominant(rs, sol.gamma) == rs.fundamental_weight(sol.fundamental_index));
        }
      }
    }
    const auto a3 = RootSystem::parse("A3");
    const CoxeterWord c = CoxeterWord::from_one_based({1, 2, 3});
    CHECK(kind_of([&] { solve_gamma(a3, c, {1, 0, 1}); }) == ErrorKind::out_of_range);
    CHECK(kind_of([&] { solve_gamma(a3, c, {1, 1}); }) == ErrorKind::out_of_range);
  }

  TEST_CASE("extreme weight subsets in type A") {
    // omega_1 of A_2 is the weight of e_1; s_1 omega_1 that of e_2.
    const auto a2 = RootSystem::parse("A2");
    CHECK(extreme_weight_subset_A(2, 0, a2.fundamental_weight(0)) == std::vector<std::size_t>{0});
    CHECK(extreme_weight_subset_A(2, 0, simple_reflection(a2, 0, a2.fundamental_weight(0))) ==
          std::vector<std::size_t>{1});
    CHECK(extreme_weight_subset_A(2, 1, a2.fundamental_weight(1)) == std::vector<std::size_t>{0, 1});
    CHECK(kind_of([] { extreme_weight_subset_A(2, 0, Weight{2, 0}); }) == ErrorKind::weight_not_extreme);
  }

  TEST_CASE("minor formula on small type A quivers") {
    const auto a2 = RootSystem::parse("A2");
    CHECK(f_polynomial_via_minor(a2, CoxeterWord::from_one_based({1, 2}), {1, 1}).to_string() == "1 + u1 + u1*u2");
    CHECK(f_polynomial_via_minor(a2, CoxeterWord::from_one_based({2, 1}), {1, 1}).to_string() == "1 + u2 + u1*u2");
    CHECK(f_polynomial_via_minor(a2, CoxeterWord::from_one_based({1, 2}), {1, 0}).to_string() == "1 + u1");

    for (const char* label : {"A1", "A2", "A3"}) {
      const auto rs = RootSystem::parse(label);
      for (const auto& c : all_words(rs.rank())) {
        const auto q = orientation_from_coxeter(rs, c);
        for (const auto& root : rs.positive_roots()) {
          const auto rep = dynkin_indecomposable(q, root);
          CHECK(rep.dims() == DimensionVector(root));
          CHECK(f_polynomial_via_minor(rs, c, root) == f_polynomial(rep));
        }
      }
    }
    CHECK(kind_of([] {
            const auto d4 = RootSystem::parse("D4");
            f_polynomial_via_minor(d4, CoxeterWord({0, 1, 2, 3}), {1, 1, 1, 1});
          }) == ErrorKind::out_of_scope);
  }

  TEST_CASE("indecomposables are bricks without self-extensions") {
    const auto d4 = RootSystem::parse("D4");
    const auto q = orientation_from_coxeter(d4, CoxeterWord({0, 1, 2, 3}));
    for (const auto& root : d4.positive_roots()) {
      const auto rep = dynkin_indecomposable(q, root, 5);
      CHECK(hom_dim(rep, rep) == 1);
      CHECK(ext1_dim(rep) == 0);
    }
    CHECK(dynkin_indecomposable(q, {1, 2, 1, 1}, 9).matrices() == dynkin_indecomposable(q, {1, 2, 1, 1}, 9).matrices());
    CHECK(kind_of([&] { dynkin_indecomposable(q, {1, 2, 2, 1}); }) == ErrorKind::search_exhausted);
  }
}
