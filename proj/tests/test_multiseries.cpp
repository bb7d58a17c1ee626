#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "frobenius/multiseries.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace frob;
using frob::testing::Gen;

namespace {

CSeries2 poly(int order, std::initializer_list<std::pair<MultiIndex, Complex>> t) { return CSeries2(order, t); }

}  // namespace

TEST_CASE("multi-index canonical order is by norm then q1", "[multiseries]") {
  CHECK(MultiIndex{0, 2} < MultiIndex{1, 1});
  CHECK(MultiIndex{1, 1} < MultiIndex{2, 0});
  CHECK(MultiIndex{2, 0} < MultiIndex{0, 3});
  CHECK(dense_index(0, 0) == 0);
  CHECK(dense_index(0, 1) == 1);
  CHECK(dense_index(1, 0) == 2);
  CHECK(dense_index(0, 2) == 3);
  CHECK(dense_size(2) == 6);
}

TEST_CASE("construction keeps canonical sparse form", "[multiseries]") {
  const CSeries2 s(3, {{{0, 0}, 1.0}, {{1, 0}, 0.0}, {{2, 2}, 5.0}, {{0, 3}, 2.0}});
  CHECK(s.size() == 2);
  CHECK(s.coeff(0, 3) == Complex{2.0});
  CHECK(s.coeff(2, 2) == Complex{});
  CHECK(is_canonical(s));
  CHECK_THROWS_AS(CSeries2(2, {{{1, 0}, Complex{NAN, 0}}}), Error);
}

TEST_CASE("cauchy_mul examples", "[multiseries]") {
  SECTION("(1+x)(1+y)") {
    const auto p = cauchy_mul(poly(4, {{{0, 0}, 1}, {{1, 0}, 1}}), poly(4, {{{0, 0}, 1}, {{0, 1}, 1}}));
    CHECK(p == poly(4, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
  }
  SECTION("(1-x) times the truncated geometric series") {
    CSeries2::Table t;
    for (int n = 0; n <= 9; ++n) t[{n, 0}] = 1.0;
    const auto p = cauchy_mul(poly(9, {{{0, 0}, 1}, {{1, 0}, -1}}), CSeries2(9, t));
    CHECK(p == CSeries2::constant(1.0, 9));
  }
  SECTION("(1+2x+3y)^2 against the convolution oracle") {
    const auto f = poly(5, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 3}});
    const auto p = cauchy_mul(f, f);
    CHECK(p == frob::testing::convolution_oracle(f, f));
    CHECK(p == poly(5, {{{0, 0}, 1}, {{1, 0}, 4}, {{0, 1}, 6}, {{2, 0}, 4}, {{1, 1}, 12}, {{0, 2}, 9}}));
  }
  SECTION("result order is the smaller order") {
    CHECK(cauchy_mul(CSeries2::constant(1.0, 3), CSeries2::constant(1.0, 7)).order() == 3);
  }
}

TEST_CASE("reciprocal examples", "[multiseries]") {
  const int N = 10;
  SECTION("1/(1-x^2)") {
    const auto g = reciprocal(poly(N, {{{0, 0}, 1}, {{2, 0}, -1}}));
    for (int k = 0; k <= N; ++k) CHECK(g.coeff(k, 0) == Complex(k % 2 == 0 ? 1.0 : 0.0));
  }
  SECTION("1/(1-xy)") {
    const auto g = reciprocal(poly(N, {{{0, 0}, 1}, {{1, 1}, -1}}));
    for (int k = 0; 2 * k <= N; ++k) CHECK(g.coeff(k, k) == Complex(1.0));
    CHECK(g.size() == static_cast<std::size_t>(N / 2 + 1));
  }
  SECTION("1/(1+x)") {
    const auto g = reciprocal(poly(N, {{{0, 0}, 1}, {{1, 0}, 1}}));
    for (int k = 0; k <= N; ++k) CHECK(g.coeff(k, 0) == Complex(k % 2 == 0 ? 1.0 : -1.0));
  }
  SECTION("zero constant term is refused") {
    try {
      (void)reciprocal(poly(N, {{{1, 0}, 1}}));
      FAIL("expected ZeroConstantTerm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
    }
  }
}

TEST_CASE("analytic transforms", "[multiseries]") {
  const int N = 8;
  SECTION("sqrt of a perfect square") {
    const auto g = analytic_transform(poly(N, {{{0, 0}, 1}, {{1, 0}, 2}, {{2, 0}, 1}}), Transform::sqrt);
    CHECK(max_abs_diff(g, poly(N, {{{0, 0}, 1}, {{1, 0}, 1}})) < 1e-15);
  }
  SECTION("exp(x)") {
    const auto g = analytic_transform(poly(N, {{{1, 0}, 1}}), Transform::exp);
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
      if (k > 0) fact *= k;
      CHECK(std::abs(g.coeff(k, 0) - 1.0 / fact) < 1e-15);
    }
  }
  SECTION("antiderivative of 1 + 2x") {
    const auto g = analytic_transform(poly(N, {{{0, 0}, 1}, {{1, 0}, 2}}), Transform::antiderivative_x);
    CHECK(g == poly(N, {{{1, 0}, 1}, {{2, 0}, 1}}));
  }
  SECTION("antiderivative drops terms past the order") {
    CHECK(antiderivative_x(poly(3, {{{3, 0}, 1}, {{0, 3}, 1}})).empty());
  }
  SECTION("sqrt refuses a zero constant term") {
    CHECK_THROWS_AS(sqrt_series(poly(N, {{{0, 1}, 1}})), Error);
  }
}

TEST_CASE("property: cauchy_mul is commutative and associative", "[multiseries][property]") {
  Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = gen.integer(0, 8);
    const auto f = gen.series(N), g = gen.series(gen.integer(0, 8)), h = gen.series(gen.integer(0, 8));
    CHECK(max_abs_diff(cauchy_mul(f, g), cauchy_mul(g, f)) <= 1e-14);
    CHECK(max_abs_diff(cauchy_mul(cauchy_mul(f, g), h), cauchy_mul(f, cauchy_mul(g, h))) <= 1e-13);
    CHECK(max_abs_diff(cauchy_mul(f, g), frob::testing::convolution_oracle(f, g)) <= 1e-14);
  }
}

TEST_CASE("property: reciprocal is an involution and an inverse", "[multiseries][property]") {
  Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = gen.unit_series(gen.integer(0, 8));
    const auto g = reciprocal(f);
    CHECK(max_abs_diff(cauchy_mul(f, g), CSeries2::constant(1.0, f.order())) <= 1e-10);
    CHECK(max_abs_diff(reciprocal(g), f) <= 1e-9);
  }
}

TEST_CASE("property: sqrt squares back and exp turns sums into products", "[multiseries][property]") {
  Gen gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = gen.integer(0, 8);
    const auto f = gen.unit_series(N);
    const auto s = sqrt_series(f);
    CHECK(max_abs_diff(cauchy_mul(s, s), f) <= 1e-10);
    auto u = gen.series(N), v = gen.series(N);
    u = u - CSeries2::constant(u.constant_term(), N);
    v = v - CSeries2::constant(v.constant_term(), N);
    CHECK(max_abs_diff(exp_series(u + v), cauchy_mul(exp_series(u), exp_series(v))) <= 1e-11);
  }
}

TEST_CASE("property: every operation returns canonical series", "[multiseries][property]") {
  Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = gen.integer(0, 7);
    const auto f = gen.unit_series(N), g = gen.series(N);
    for (const auto& s : {f + g, f - g, cauchy_mul(f, g), reciprocal(f), sqrt_series(f), exp_series(g),
                          antiderivative_x(g), derivative_x(g), derivative_y(g), shift(g, 1, 2), swap_xy(g)})
      CHECK(is_canonical(s));
    CHECK((f - f).empty());
  }
}
