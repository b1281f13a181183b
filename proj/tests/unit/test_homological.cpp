#include <doctest.h>

#include <functional>

#include "quivergrass/error.hpp"
#include "quivergrass/kronecker.hpp"
#include "quivergrass/representation.hpp"
#include "quivergrass/sampler.hpp"

using namespace quivergrass;

namespace {

/// Number of intertwiners A -> B over F_p, by trying every tuple of
/// matrices; equals p^hom_dim.
std::uint64_t count_homs(const Representation& a, const Representation& b, std::uint32_t p) {
  const auto fa = mod_matrices(a, p);
  const auto fb = mod_matrices(b, p);
  const auto& q = a.quiver();
  const std::size_t n = q.num_vertices();
  std::vector<Matrix<std::uint32_t>> g(n);
  for (std::size_t v = 0; v < n; ++v)
    g[v] = Matrix<std::uint32_t>(static_cast<std::size_t>(b.dims()[v]), static_cast<std::size_t>(a.dims()[v]), 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t k) {
    if (v == n) {
      for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
        const auto& arr = q.arrows()[ai];
        // g_t * phiA == phiB * g_s
        const auto& gs = g[arr.source];
        const auto& gt = g[arr.target];
        for (std::size_t i = 0; i < gt.rows(); ++i)
          for (std::size_t j = 0; j < fa[ai].cols(); ++j) {
            std::uint64_t lhs = 0, rhs = 0;
            for (std::size_t k2 = 0; k2 < gt.cols(); ++k2) lhs += std::uint64_t{gt(i, k2)} * fa[ai](k2, j);
            for (std::size_t k2 = 0; k2 < gs.rows(); ++k2) rhs += std::uint64_t{fb[ai](i, k2)} * gs(k2, j);
            if (lhs % p != rhs % p) return;
          }
      }
      ++count;
      return;
    }
    if (k == g[v].rows() * g[v].cols()) {
      rec(v + 1, 0);
      return;
    }
    for (std::uint32_t x = 0; x < p; ++x) {
      g[v](k / g[v].cols(), k % g[v].cols()) = x;
      rec(v, k + 1);
    }
    g[v](k / g[v].cols(), k % g[v].cols()) = 0;
  };
  rec(0, 0);
  return count;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("homological") {
  TEST_CASE("hom dimension agrees with brute-force intertwiner counts over F_3") {
    const Quiver k = Quiver::kronecker();
    const std::vector<Representation> reps{
        build_kronecker({KroneckerFamily::preprojective, 2, ProjectivePoint(0)}),
        build_kronecker({KroneckerFamily::preinjective, 2, ProjectivePoint(0)}),
        build_kronecker({KroneckerFamily::regular, 1, ProjectivePoint(1)}),
        build_kronecker({KroneckerFamily::regular, 1, ProjectivePoint::infinity()}),
        Representation::simple(k, 0),
        Representation::simple(k, 1),
    };
    for (const auto& a : reps)
      for (const auto& b : reps) {
        if (a.dims().total() * b.dims().total() > 9) continue;
        const auto am = reduce_mod(a, 3);
        const auto bm = reduce_mod(b, 3);
        CHECK(ipow(3, hom_dim(am, bm)) == count_homs(am, bm, 3));
        CHECK(hom_dim(a, b) == hom_dim(am, bm));
      }
  }

  TEST_CASE("hom is additive in both arguments") {
    const Quiver q(3, {{0, 1}, {2, 1}});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto a = sample_general_rep(q, {1, 2, 1}, seed, 3);
      const auto b = sample_general_rep(q, {1, 1, 0}, seed + 100, 3);
      const auto c = sample_general_rep(q, {0, 1, 1}, seed + 200, 3);
      CHECK(hom_dim(direct_sum(a, b), c) == hom_dim(a, c) + hom_dim(b, c));
      CHECK(hom_dim(c, direct_sum(a, b)) == hom_dim(c, a) + hom_dim(c, b));
    }
  }

  TEST_CASE("simples") {
    const Quiver k = Quiver::kronecker();
    const auto s1 = Representation::simple(k, 0);
    const auto s2 = Representation::simple(k, 1);
    CHECK(hom_dim(s1, s1) == 1);
    CHECK(hom_dim(s1, s2) == 0);
    // ext(S1, S1) = 0, ext^1(S1, S2) = 2 = number of arrows 1 -> 2.
    CHECK(ext1_dim(s1) == 0);
    CHECK(static_cast<long>(hom_dim(s1, s2)) - euler_form(k, s1.dims(), s2.dims()) == 2);
  }

  TEST_CASE("Kronecker rigidity") {
    for (int m = 1; m <= 4; ++m) {
      CHECK(is_rigid(build_kronecker({KroneckerFamily::preprojective, m, ProjectivePoint(0)})));
      CHECK(is_rigid(build_kronecker({KroneckerFamily::preinjective, m, ProjectivePoint(0)})));
    }
    for (const char* lambda : {"0", "1", "-1/2", "inf"}) {
      const auto reg = build_kronecker({KroneckerFamily::regular, 1, ProjectivePoint::parse(lambda)});
      CHECK(hom_dim(reg, reg) == 1);
      CHECK(ext1_dim(reg) == 1);
    }
    CHECK_THROWS_AS(ext1_dim(Representation::simple(Quiver(1, {{0, 0}}), 0)), Error);
  }

  TEST_CASE("duality") {
    const auto rep = build_kronecker({KroneckerFamily::preprojective, 3, ProjectivePoint(0)});
    const auto dual = dual_representation(rep);
    CHECK(dual.quiver() == Quiver::kronecker().opposite());
    CHECK(dual.dims() == rep.dims());
    CHECK(dual_representation(dual) == rep);
    CHECK(hom_dim(dual, dual) == hom_dim(rep, rep));
  }

  TEST_CASE("mixed prime fields are rejected") {
    const auto s = Representation::simple(Quiver::kronecker(), 0);
    CHECK_THROWS_AS(hom_dim(reduce_mod(s, 3), reduce_mod(s, 5)), Error);
    CHECK_THROWS_AS(hom_dim(reduce_mod(s, 3), s), Error);
  }
}
