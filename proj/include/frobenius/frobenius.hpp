#ifndef FROBENIUS_FROBENIUS_HPP
#define FROBENIUS_FROBENIUS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "indicial.hpp"
#include "multiseries.hpp"
#include "pde.hpp"

namespace frob {

using CoeffTable = std::map<MultiIndex, Complex>;

namespace detail {

// e_Q for the layered recurrence. `coef(k, q1, q2)` returns a, b or c (k = 0, 1, 2)
// at (q1, q2); `prior(i, j)` returns an already known D_{i,j}.
template <class Coef, class Prior>
Complex recurrence_sum(const Coef& coef, Complex r, Complex s, int q1, int q2, const Prior& prior) {
  Complex e{};
  for (int i = 0; i < q1; ++i)
    for (int j = 0; j <= q2; ++j) {
      const int k1 = q1 - i, k2 = q2 - j;
      const Complex w = (static_cast<double>(i) + r) * coef(0, k1, k2) +
                        (static_cast<double>(j) + s) * coef(1, k1, k2) + coef(2, k1, k2);
      if (w != Complex{}) e += w * prior(i, j);
    }
  for (int j = 0; j < q2; ++j) {
    const int k2 = q2 - j;
    const Complex w = (static_cast<double>(q1) + r) * coef(0, 0, k2) +
                      (static_cast<double>(j) + s) * coef(1, 0, k2) + coef(2, 0, k2);
    if (w != Complex{}) e += w * prior(q1, j);
  }
  return e;
}

struct DenseCoefficients {
  std::vector<Complex> a, b, c;
  explicit DenseCoefficients(const RegularSingularPDE& pde) : a(pde.a.dense()), b(pde.b.dense()), c(pde.c.dense()) {}
  Complex operator()(int k, int q1, int q2) const {
    const auto idx = dense_index(q1, q2);
    return k == 0 ? a[idx] : (k == 1 ? b[idx] : c[idx]);
  }
};

}  // namespace detail

/// e_Q from an explicit table of earlier coefficients. Every D_{i,j} with
/// i < q1, j <= q2 and every D_{q1,j} with j < q2 must be present (zeros included).
inline Complex recurrence_rhs(const RegularSingularPDE& pde, Complex r, Complex s, MultiIndex Q, const CoeffTable& prior) {
  if (Q.norm() < 1 || Q.norm() > pde.order())
    throw Error(ErrorKind::OrderMismatch, "Q must satisfy 1 <= |Q| <= order of the coefficient data");
  std::vector<MultiIndex> missing;
  for (int i = 0; i <= Q.q1; ++i)
    for (int j = 0; j <= Q.q2; ++j) {
      if (i == Q.q1 && j == Q.q2) continue;
      if (!prior.count({i, j})) missing.push_back({i, j});
    }
  if (!missing.empty()) throw Error(ErrorKind::MissingPriorCoefficient, "earlier coefficients are missing", missing);
  const detail::DenseCoefficients coef(pde);
  return detail::recurrence_sum(coef, r, s, Q.q1, Q.q2, [&](int i, int j) { return prior.at({i, j}); });
}

enum class ResonancePolicy {
  refuse,           // any resonant shift up to N is an error
  zero_compatible,  // at a resonant shift with e_Q = 0 (within tol) set D_Q = 0; otherwise error
};

struct SolveOptions {
  double tol = kDefaultResonanceTol;
  ResonancePolicy policy = ResonancePolicy::refuse;
};

struct FrobeniusSolution {
  Complex r0{}, s0{};
  int order = 0;
  CSeries2 coeffs;
  ResonanceReport resonance;
  std::vector<MultiIndex> zeroed_resonances;  // filled only under ResonancePolicy::zero_compatible
};

inline FrobeniusSolution solve(const RegularSingularPDE& pde, Complex r0, Complex s0, int N, const SolveOptions& opt = {}) {
  if (N < 0 || N > pde.order())
    throw Error(ErrorKind::OrderMismatch,
                "requested order " + std::to_string(N) + " exceeds coefficient data order " + std::to_string(pde.order()));
  const IndicialConic conic = indicial_of(pde);
  FrobeniusSolution sol;
  sol.r0 = r0;
  sol.s0 = s0;
  sol.order = N;
  sol.resonance = resonance_scan(conic, r0, s0, N, opt.tol);
  if (!sol.resonance.clean() && opt.policy == ResonancePolicy::refuse) {
    std::vector<MultiIndex> qs;
    for (const auto& h : sol.resonance.hits) qs.push_back(h.Q);
    throw Error(ErrorKind::ResonantPoint, std::to_string(qs.size()) + " resonant shift(s) up to the requested order", qs);
  }

  const detail::DenseCoefficients coef(pde);
  std::vector<Complex> D(dense_size(N));
  D[0] = 1.0;
  auto prior = [&](int i, int j) { return D[dense_index(i, j)]; };
  for (int n = 1; n <= N; ++n)
    for (int q2 = 0; q2 <= n; ++q2) {
      const int q1 = n - q2;
      const Complex e = detail::recurrence_sum(coef, r0, s0, q1, q2, prior);
      const Complex p = conic(r0 + static_cast<double>(q1), s0 + static_cast<double>(q2));
      if (std::abs(p) < opt.tol) {
        if (std::abs(e) > opt.tol)
          throw Error(ErrorKind::ResonantPoint, "resonant shift with nonzero right-hand side", {{q1, q2}});
        sol.zeroed_resonances.push_back({q1, q2});
        continue;
      }
      D[dense_index(q1, q2)] = -e / p;
    }
  std::sort(sol.zeroed_resonances.begin(), sol.zeroed_resonances.end());
  sol.coeffs = CSeries2::from_dense(N, D);
  return sol;
}

// ---------------------------------------------------------------------------

struct ConvergenceReport {
  bool parabolic_real_type = false;
  bool elliptic_condition = false;
  bool hyperbolic_condition = false;
  bool general_sufficient = false;
  bool any = false;
};

/// Evaluates the sufficient conditions on (A, B, C); equalities are tested
/// relative to max(|A|, |B|, |C|) with tolerance `rel_tol`.
inline ConvergenceReport convergence_report(Complex A, Complex B, Complex C, double rel_tol = 1e-12) {
  const double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
  const double eps = rel_tol * scale;
  ConvergenceReport rep;
  if (scale == 0.0) return rep;
  const Complex p = std::sqrt(A) * std::sqrt(C);
  // Either choice of sign for the product of square roots is admissible.
  rep.parabolic_real_type = (std::abs(B - 2.0 * p) <= eps && p.real() > 0.0) ||
                            (std::abs(B + 2.0 * p) <= eps && -p.real() > 0.0);
  const double ac = (A * std::conj(C)).real();
  const bool b_zero = std::abs(B) <= eps;
  rep.elliptic_condition = b_zero && ac > 0.0;
  rep.hyperbolic_condition = b_zero && ac < 0.0;
  rep.general_sufficient = std::norm(B) / 2.0 + ac > 0.0 && (A * std::conj(B)).real() > 0.0 &&
                           (B * std::conj(C)).real() > 0.0;
  rep.any = rep.parabolic_real_type || rep.elliptic_condition || rep.hyperbolic_condition || rep.general_sufficient;
  return rep;
}

// ---------------------------------------------------------------------------

/// d_n = sum_{|Q| = n} |D_Q| for n = 0..order.
inline std::vector<double> layer_sums(const CSeries2& coeffs) {
  std::vector<double> d(static_cast<std::size_t>(coeffs.order()) + 1, 0.0);
  for (const auto& [q, v] : coeffs.terms()) d[static_cast<std::size_t>(q.norm())] += std::abs(v);
  return d;
}

inline constexpr int kMinRadiusOrder = 10;

/// 1 / max_{n in [ceil(N/2), N], d_n > 0} d_n^(1/n); +infinity when every such d_n vanishes.
inline double radius_estimate(const CSeries2& coeffs) {
  const int N = coeffs.order();
  if (N < kMinRadiusOrder) throw Error(ErrorKind::ConstraintViolated, "radius estimate needs order >= 10");
  const auto d = layer_sums(coeffs);
  double root_max = 0.0;
  for (int n = std::max(1, (N + 1) / 2); n <= N; ++n) {
    const double dn = d[static_cast<std::size_t>(n)];
    if (dn > 0.0) root_max = std::max(root_max, std::exp(std::log(dn) / n));
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (root_max == 0.0) return inf;
  const double rho = 1.0 / root_max;
  return std::isfinite(rho) ? rho : inf;
}

inline double radius_estimate(const FrobeniusSolution& sol) { return radius_estimate(sol.coeffs); }

/// Coefficients of the aggregated one-variable recurrence
/// (n^2 - n - 1/2) a_n = (n + 1) a_{n+1}, a_0 = 1, stored as D_{n,0}.
inline CSeries2 divergent_example_coefficients(int N) {
  std::vector<Complex> d(dense_size(N));
  double a = 1.0;
  for (int n = 0; n <= N; ++n) {
    d[dense_index(n, 0)] = a;
    const double nn = n;
    a = (nn * nn - nn - 0.5) * a / (nn + 1.0);
  }
  return CSeries2::from_dense(N, d);
}

// ---------------------------------------------------------------------------

namespace detail {

inline bool depends_on_y(const CSeries2& f) {
  for (const auto& [q, v] : f.terms())
    if (q.q2 > 0) return true;
  return false;
}

// f = exp(antiderivative_x((w - 1)/x)) with w = sqrt(A(0)/A(x)).
inline CSeries2 prepare_one(const CSeries2& A) {
  const Complex a0 = A.constant_term();
  if (std::abs(a0) == 0.0) throw Error(ErrorKind::ZeroConstantTerm, "leading coefficient vanishes at the origin");
  const CSeries2 w = sqrt_series(a0 * reciprocal(A));
  const CSeries2 u = unshift(w - CSeries2::constant(1.0, A.order()), 1, 0);
  return exp_series(antiderivative_x(u));
}

}  // namespace detail

struct PreparedCoordinates {
  CSeries2 f;  // in x
  CSeries2 g;  // in y
};

inline PreparedCoordinates prepare_coordinates(const CSeries2& A_of_x, const CSeries2& C_of_y) {
  if (detail::depends_on_y(A_of_x) || detail::depends_on_y(swap_xy(C_of_y)))
    throw Error(ErrorKind::ConstraintViolated, "A must depend on x only and C on y only");
  return {detail::prepare_one(A_of_x), swap_xy(detail::prepare_one(swap_xy(C_of_y)))};
}

/// max |A x^2 (f + x f')^2 - A(0) (x f)^2| over the coefficients, divided by max(1, max |A(0) (x f)^2|).
inline double preparation_residual(const CSeries2& A_of_x, const CSeries2& f) {
  const CSeries2 xf = shift(f, 1, 0);
  const CSeries2 lin = f + shift(derivative_x(f), 1, 0);
  const CSeries2 lhs = cauchy_mul(A_of_x, shift(cauchy_mul(lin, lin), 2, 0));
  const CSeries2 rhs = A_of_x.constant_term() * cauchy_mul(xf, xf);
  return max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs));
}

}  // namespace frob

#endif  // FROBENIUS_FROBENIUS_HPP
