#include <doctest.h>

#include <sstream>

#include "quivergrass/error.hpp"
#include "quivergrass/io.hpp"
#include "quivergrass/linalg.hpp"
#include "quivergrass/modular.hpp"
#include "quivergrass/polynomial.hpp"
#include "quivergrass/quiver.hpp"
#include "quivergrass/representation.hpp"
#include "quivergrass/scalar.hpp"

#include "check.hpp"

using namespace quivergrass;
using testing::kind_of;

TEST_SUITE("core") {
  TEST_CASE("modular arithmetic") {
    CHECK(pow_mod(3, 4, 7) == 4);
    for (std::uint32_t a = 1; a < 13; ++a) CHECK(mul_mod(a, inv_mod(a, 13), 13) == 1);
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(next_prime(13) == 17);
    CHECK(odd_primes(5) == std::vector<std::uint32_t>{3, 5, 7, 11, 13});
  }

  TEST_CASE("scalar domains") {
    CHECK(ScalarDomain::prime_field(5).to_string() == "F_5");
    CHECK(kind_of([] { ScalarDomain::prime_field(4); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { ScalarDomain::prime_field(2); }) == ErrorKind::invalid_argument);

    const Scalar half(parse_rational("1/2"));
    CHECK(half.reduce_mod(5) == 3);
    CHECK(kind_of([] { Scalar(parse_rational("1/3")).reduce_mod(3); }) == ErrorKind::domain_mismatch);
    CHECK(Scalar(-1).reduce_mod(7) == 6);
    CHECK(kind_of([] { Scalar(ModInt{2, 5}).to_rational(); }) == ErrorKind::domain_mismatch);
    CHECK(Scalar(3).cast_to(ScalarDomain::rationals()).domain() == ScalarDomain::rationals());
  }

  TEST_CASE("polynomial arithmetic and printing") {
    const auto u1 = Polynomial::variable(2, 0);
    const auto u2 = Polynomial::variable(2, 1);
    const auto one = Polynomial::constant(2, 1);
    const auto f = (one + u2) * (one + u2) + u1 * u2 * u2;
    CHECK(f.to_string() == "1 + 2*u2 + u2^2 + u1*u2^2");
    CHECK(f.total_degree() == 3);
    CHECK(((one + u1) * (one - u1)).to_string() == "1 - u1^2");
    CHECK(Polynomial(2).to_string() == "0");
    CHECK((u1 - u1).is_zero());
    CHECK(kind_of([&] { (void)(u1 * Polynomial::variable(3, 0)); }) == ErrorKind::variable_count_mismatch);

    const std::vector<Integer> point{2, 3};
    CHECK(f.evaluate(point) == Integer(1 + 6 + 9 + 18));
    const std::vector<std::uint32_t> modp{2, 3};
    CHECK(f.evaluate_mod(modp, 7) == 34 % 7);
    CHECK(f.derivative(0).to_string() == "u2^2");
    CHECK(f.derivative(1).to_string() == "2 + 2*u2 + 2*u1*u2");
    CHECK((u1 * u1 * u2).is_homogeneous(3));
    CHECK_FALSE(f.is_homogeneous(3));
  }

  TEST_CASE("polynomial determinant vanishes exactly where the evaluated matrix is singular") {
    // det of [[a, b], [c, d]] with polynomial entries, checked pointwise.
    const auto x = Polynomial::variable(1, 0);
    const auto one = Polynomial::constant(1, 1);
    PolynomialMatrix m(3, 3, Polynomial(1));
    m(0, 0) = x; m(0, 1) = one; m(0, 2) = x * x;
    m(1, 0) = one; m(1, 1) = x; m(1, 2) = one;
    m(2, 0) = x + one; m(2, 1) = one; m(2, 2) = x;
    const auto det = determinant(m);
    for (long t = -3; t <= 3; ++t) {
      Matrix<Rational> numeric(3, 3);
      const std::vector<Integer> at{t};
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) numeric(r, c) = Rational(m(r, c).evaluate(at));
      // Rank-deficient exactly when det vanishes.
      const bool singular = rank(numeric, RationalField{}) < 3;
      CHECK(singular == (det.evaluate(at) == 0));
    }
    // [[2,1,4],[1,2,1],[3,1,2]]
    CHECK(det.evaluate(std::vector<Integer>{2}) == -13);
  }

  TEST_CASE("quivers") {
    const Quiver k = Quiver::kronecker();
    CHECK(k.num_arrows() == 2);
    CHECK(k.is_acyclic());
    CHECK(k.is_sink(1));
    CHECK_FALSE(k.is_sink(0));
    CHECK(k.opposite().arrows().front() == Arrow{1, 0});

    const Quiver cyc(2, {{0, 1}, {1, 0}});
    CHECK(cyc.has_two_cycles());
    CHECK_FALSE(cyc.is_cluster_quiver());
    CHECK_FALSE(cyc.topological_order().has_value());
    CHECK(Quiver(1, {{0, 0}}).has_loops());
    CHECK(kind_of([] { Quiver(2, {{0, 2}}); }) == ErrorKind::out_of_range);

    CHECK(*Quiver(3, {{2, 0}, {1, 0}}).topological_order() == std::vector<std::size_t>{1, 2, 0});
  }

  TEST_CASE("dimension vectors and the Euler form") {
    const DimensionVector a{1, 2};
    CHECK((a + DimensionVector{1, 0}).to_string() == "(2,2)");
    CHECK(kind_of([&] { (void)(a - DimensionVector{2, 0}); }) == ErrorKind::out_of_range);
    CHECK(box(a).size() == 6);
    CHECK(box(a).front() == DimensionVector{0, 0});
    CHECK(box(a).back() == a);

    // Kronecker: <d,e> = d1 e1 + d2 e2 - 2 d1 e2.
    CHECK(euler_form(Quiver::kronecker(), {1, 2}, {1, 2}) == 1 + 4 - 4);
    CHECK(euler_form(Quiver::kronecker(), {1, 1}, {1, 1}) == 0);
    CHECK(kind_of([] { euler_form(Quiver(1, {{0, 0}}), {1}, {1}); }) == ErrorKind::not_acyclic);
  }

  TEST_CASE("row reduction") {
    Matrix<std::uint32_t> m{{2, 4, 1}, {1, 2, 4}, {0, 0, 0}};
    const auto pivots = row_reduce(m, PrimeField(5));
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(m == Matrix<std::uint32_t>{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});

    Matrix<Rational> a{{2, 1}, {1, 1}};
    auto x = solve_square(a, {Rational(3), Rational(2)}, RationalField{});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_square(Matrix<Rational>{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}, RationalField{}));
  }

  TEST_CASE("representation validation") {
    const Representation bad = Representation::from_integers(Quiver::kronecker(), {1, 2}, {{{1}, {0}}, {{1, 0}}});
    try {
      validate_representation(bad);
      FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::shape_mismatch);
      CHECK(e.detail() == 1);
    }
    std::vector<Matrix<Scalar>> mixed(1, Matrix<Scalar>(1, 1));
    mixed[0](0, 0) = Scalar(parse_rational("1/2"));
    CHECK(kind_of([&] { validate_representation(Representation(Quiver::linear(2), {1, 1}, mixed)); }) ==
          ErrorKind::mixed_scalar_domains);
    CHECK(kind_of([] {
            direct_sum(Representation::zero(Quiver::kronecker()), Representation::zero(Quiver::linear(2)));
          }) == ErrorKind::quiver_mismatch);
  }

  TEST_CASE("direct sums are block diagonal") {
    const auto a = Representation::from_integers(Quiver::linear(2), {1, 1}, {{{2}}});
    const auto b = Representation::from_integers(Quiver::linear(2), {1, 2}, {{{1}, {3}}});
    const auto s = direct_sum(a, b);
    CHECK(s.dims() == DimensionVector{2, 3});
    CHECK(s == Representation::from_integers(Quiver::linear(2), {2, 3}, {{{2, 0}, {0, 1}, {0, 3}}}));
  }

  TEST_CASE("io round trip and errors") {
    const auto rep = Representation::from_integers(Quiver::kronecker(), {1, 2}, {{{1}, {0}}, {{0}, {1}}});
    const auto j = representation_to_json(rep);
    CHECK(j["vertices"] == 2);
    CHECK(j["arrows"] == nlohmann::json::parse("[[1,2],[1,2]]"));
    CHECK(representation_from_json(j) == rep);

    CHECK(kind_of([] { representation_from_json(nlohmann::json::parse(R"({"vertices": 1})")); }) ==
          ErrorKind::parse_error);
    CHECK(kind_of([] {
            representation_from_json(nlohmann::json::parse(
                R"({"vertices": 2, "arrows": [[1,2]], "dims": [1,1], "matrices": [[[1,2]]]})"));
          }) == ErrorKind::shape_mismatch);
    CHECK(kind_of([] {
            representation_from_json(nlohmann::json::parse(
                R"({"vertices": 2, "arrows": [[1,3]], "dims": [1,1], "matrices": [[[1]]]})"));
          }) == ErrorKind::parse_error);

    const auto big = representation_from_json(nlohmann::json::parse(
        R"({"vertices": 2, "arrows": [[1,2]], "dims": [1,1], "matrices": [[["123456789012345678901234567890"]]]})"));
    CHECK(representation_to_json(big)["matrices"][0][0][0] == "123456789012345678901234567890");

    const auto f = Polynomial::variable(2, 0) * Polynomial::variable(2, 1) + Polynomial::constant(2, 1);
    CHECK(fpolynomial_from_json(fpolynomial_to_json(f)) == f);
  }
}
