#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "frobenius/euler.hpp"
#include "frobenius/indicial.hpp"
#include "frobenius/verify.hpp"
#include "support/generators.hpp"

using namespace frob;
using frob::testing::Gen;

namespace {

bool same_conic(const IndicialConic& a, const IndicialConic& b, double tol = 1e-12) {
  const auto x = a.coefficients(), y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > tol * std::max(1.0, std::abs(y[i]))) return false;
  return true;
}

IndicialConic euler_conic(double A, double B, double C, double D, double E, double F) {
  return indicial_of(EulerPDE{A, B, C, D, E, F});
}

std::set<MultiIndex> hit_set(const ResonanceReport& r) {
  std::set<MultiIndex> out;
  for (const auto& h : r.hits) out.insert(h.Q);
  return out;
}

IndicialConic scaled(const IndicialConic& c, Complex k) {
  return {k * c.cA, k * c.cB, k * c.cC, k * c.cD, k * c.cE, k * c.cF};
}

}  // namespace

TEST_CASE("indicial_of examples", "[indicial]") {
  const auto p = euler_conic(4, 0, 9, -36, 45, 100);
  CHECK(same_conic(p, {4, 0, 9, -40, 36, 100}));
  CHECK(p(8.0, -2.0) == Complex{});
  // (r-5)^2/9 + (s+2)^2/4 - 1, times 36
  Gen g(31);
  for (int i = 0; i < 20; ++i) {
    const double r = g.real(-5, 5), s = g.real(-5, 5);
    const double ref = 36.0 * ((r - 5) * (r - 5) / 9 + (s + 2) * (s + 2) / 4 - 1);
    CHECK(std::abs(p(r, s) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }

  CHECK(same_conic(euler_conic(1, 0, 1, 1, 1, 0), {1, 0, 1, 0, 0, 0}));

  const RegularSingularPDE bessel(1, 2, 1, CSeries2::constant(1.0, 4), CSeries2::constant(1.0, 4),
                                  CSeries2(4, {{{2, 0}, 1.0}}));
  CHECK(same_conic(indicial_of(bessel), {1, 2, 1, 0, 0, 0}));
}

TEST_CASE("classify examples", "[indicial]") {
  const auto item1 = classify(euler_conic(4, 0, 9, -36, 45, 100));
  CHECK(item1.discriminant_class == DiscriminantClass::elliptic);
  CHECK_FALSE(item1.degenerate);

  const auto item8 = classify(euler_conic(1, 2, 1, 1, 1, -1));
  CHECK(item8.discriminant_class == DiscriminantClass::parabolic);
  CHECK(item8.degenerate);
  CHECK(item8.degenerate_kind == DegenerateKind::parallel_or_repeated_lines);

  const auto item5 = classify(euler_conic(1, 0, -2, 7, 2, 9));
  CHECK(item5.discriminant_class == DiscriminantClass::hyperbolic);
  CHECK_FALSE(item5.degenerate);

  const auto item6 = classify(euler_conic(9, 0, -16, 99, -144, -31));
  CHECK(item6.discriminant_class == DiscriminantClass::hyperbolic);
  CHECK(item6.degenerate);
  CHECK(item6.degenerate_kind == DegenerateKind::two_crossing_lines);

  try {
    (void)classify({1, 0, Complex{0, 1}, 0, 0, 0});
    FAIL("expected ComplexCoefficients");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ComplexCoefficients);
  }
}

TEST_CASE("solve_for_s examples", "[indicial]") {
  const IndicialConic heat{1, 0, 0, 0, -1, 0};
  auto roots = solve_for_s(heat, 3.0);
  REQUIRE(roots.roots.size() == 1);
  CHECK(roots.roots[0] == Complex{9.0});

  const IndicialConic laplace{1, 0, 1, 0, 0, 0};
  roots = solve_for_s(laplace, 2.0);
  REQUIRE(roots.roots.size() == 2);
  CHECK(std::abs(roots.roots[0] - Complex{0, 2}) < 1e-15);
  CHECK(std::abs(roots.roots[1] - Complex{0, -2}) < 1e-15);

  roots = solve_for_s(laplace, 0.0);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0] == Complex{});
  CHECK(roots.roots[1] == Complex{});

  // P = r - 1: at r = 1 every s works, elsewhere none does
  const IndicialConic line{0, 0, 0, 1, 0, -1};
  CHECK(solve_for_s(line, 1.0).all_solutions);
  try {
    (void)solve_for_s(line, 2.0);
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSolution);
  }
}

TEST_CASE("resonance_scan examples", "[indicial]") {
  const IndicialConic bessel{1, 2, 1, 0, 0, 0};
  auto rep = resonance_scan(bessel, 0.0, 0.0, 50);
  CHECK(rep.clean());
  CHECK(rep.nonresonant_up_to == 50);

  const IndicialConic airy{1, 2, 1, -1, -1, 0};
  rep = resonance_scan(airy, 0.0, 0.0, 50);
  CHECK(hit_set(rep) == std::set<MultiIndex>{{1, 0}, {0, 1}});
  CHECK(rep.nonresonant_up_to == 0);
  CHECK(resonance_scan(airy, 0.5, 0.5, 50).clean());

  try {
    (void)resonance_scan(airy, 1.0, 1.0, 5);
    FAIL("expected BasePointNotOnConic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BasePointNotOnConic);
  }
}

TEST_CASE("property: x^r y^s solves an Euler PDE iff P(r, s) = 0", "[indicial][property]") {
  Gen g(32);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Complex, 6> t;
    for (auto& v : t) v = g.integer(-6, 6) / static_cast<double>(g.integer(1, 4));
    if (t[2] == Complex{}) t[2] = 1.0;
    const EulerPDE e = EulerPDE::from_array(t);
    const IndicialConic conic = indicial_of(e);
    const RegularSingularPDE pde(e.A, e.B, e.C, CSeries2::constant(e.D, 3), CSeries2::constant(e.E, 3),
                                 CSeries2::constant(e.F, 3));
    const CSeries2 one = CSeries2::constant(1.0, 3);
    const Complex r = g.complex(-3, 3);
    for (const Complex& s : solve_for_s(conic, r).roots) {
      CHECK(std::abs(apply_operator(pde, r, s, one).coeff(0, 0)) < 1e-9);
      CHECK(monomial_check(e, r, s));
      const Complex off = s + 0.5;
      const Complex value = apply_operator(pde, r, off, one).coeff(0, 0);
      CHECK(std::abs(value - conic(r, off)) < 1e-9);
      CHECK(monomial_check(e, r, off) == (std::abs(conic(r, off)) < kDefaultResonanceTol));
    }
  }
}

TEST_CASE("property: classify is symmetric in x and y and scale invariant", "[indicial][property]") {
  Gen g(33);
  for (int trial = 0; trial < 200; ++trial) {
    IndicialConic c;
    // Small integers hit degenerate and parabolic cases often enough.
    for (Complex* v : {&c.cA, &c.cB, &c.cC, &c.cD, &c.cE, &c.cF}) *v = g.integer(-3, 3);
    if (c.scale() == 0.0) continue;
    const IndicialConic swapped{c.cC, c.cB, c.cA, c.cE, c.cD, c.cF};
    const auto k0 = classify(c), k1 = classify(swapped);
    const auto k2 = classify(scaled(c, g.coin() ? -7.5 : 1e-3));
    CHECK(k0.discriminant_class == k1.discriminant_class);
    CHECK(k0.degenerate == k1.degenerate);
    CHECK(k0.degenerate_kind == k1.degenerate_kind);
    CHECK(k0.discriminant_class == k2.discriminant_class);
    CHECK(k0.degenerate == k2.degenerate);
  }
}

TEST_CASE("property: resonance hits are monotone in tol and N and scale invariant", "[indicial][property]") {
  Gen g(34);
  for (int trial = 0; trial < 100; ++trial) {
    // Conics through the origin with integer data so exact resonances occur.
    IndicialConic c{g.integer(-2, 2), g.integer(-2, 2), g.integer(-2, 2), g.integer(-3, 3), g.integer(-3, 3), 0};
    if (c.scale() == 0.0) continue;
    const int N = g.integer(1, 12);
    const auto small = hit_set(resonance_scan(c, 0.0, 0.0, N, 1e-12));
    const auto big = hit_set(resonance_scan(c, 0.0, 0.0, N, 0.6));
    const auto longer = hit_set(resonance_scan(c, 0.0, 0.0, N + 5, 1e-12));
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    CHECK(std::includes(longer.begin(), longer.end(), small.begin(), small.end()));
    CHECK(hit_set(resonance_scan(scaled(c, -3.0), 0.0, 0.0, N, 1e-12)) == small);
    for (const auto& h : resonance_scan(c, 0.0, 0.0, N).hits) {
      CHECK(h.Q.norm() >= 1);
      CHECK(h.Q.norm() <= N);
    }
  }
}
