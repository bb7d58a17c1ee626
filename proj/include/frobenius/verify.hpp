#ifndef FROBENIUS_VERIFY_HPP
#define FROBENIUS_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "frobenius.hpp"
#include "multiseries.hpp"
#include "pde.hpp"

namespace frob {

/// Coefficients of L[x^r0 y^s0 sum d_Q X^Q] / (x^r0 y^s0), built from whole-series
/// products rather than the layered recurrence.
inline CSeries2 apply_operator(const RegularSingularPDE& pde, Complex r0, Complex s0, const CSeries2& d) {
  const int N = std::min(d.order(), pde.order());
  CSeries2::Table second, dx, dy;
  for (const auto& [q, v] : d.terms()) {
    if (q.norm() > N) break;
    const Complex R = r0 + static_cast<double>(q.q1);
    const Complex S = s0 + static_cast<double>(q.q2);
    second[q] = (pde.A * R * (R - 1.0) + pde.B * R * S + pde.C * S * (S - 1.0)) * v;
    dx[q] = R * v;
    dy[q] = S * v;
  }
  const CSeries2 t2(N, second), tx(N, dx), ty(N, dy);
  return t2 + cauchy_mul(pde.a, tx) + cauchy_mul(pde.b, ty) + cauchy_mul(pde.c, d.truncated(N));
}

struct ResidualReport {
  double max_residual = 0.0;
  std::vector<double> per_layer;  // index n holds max |residual| on |Q| = n
  int checked_up_to = 0;
};

inline ResidualReport residual_max(const RegularSingularPDE& pde, const FrobeniusSolution& sol) {
  ResidualReport rep;
  rep.checked_up_to = std::max(0, sol.order - pde.perturbation_degree());
  rep.per_layer.assign(static_cast<std::size_t>(rep.checked_up_to) + 1, 0.0);
  const CSeries2 out = apply_operator(pde, sol.r0, sol.s0, sol.coeffs);
  for (const auto& [q, v] : out.terms()) {
    if (q.norm() > rep.checked_up_to) break;
    auto& slot = rep.per_layer[static_cast<std::size_t>(q.norm())];
    slot = std::max(slot, std::abs(v));
    rep.max_residual = std::max(rep.max_residual, slot);
  }
  return rep;
}

struct Evaluation {
  Complex value{};
  bool outside_estimated_domain = false;
};

/// x^r0 y^s0 * sum_{|Q| <= N} D_Q x^q1 y^q2 for x, y > 0. The flag is raised
/// when a finite radius estimate exists and max(x, y) is not below it.
inline Evaluation eval_solution_checked(const FrobeniusSolution& sol, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw Error(ErrorKind::OutsideDomain, "evaluation needs x > 0 and y > 0");
  Evaluation ev;
  if (sol.order >= kMinRadiusOrder) {
    const double rho = radius_estimate(sol);
    ev.outside_estimated_domain = std::isfinite(rho) && std::max(x, y) >= rho;
  }
  Complex sum{};
  for (auto it = sol.coeffs.terms().rbegin(); it != sol.coeffs.terms().rend(); ++it)
    sum += it->second * std::pow(x, it->first.q1) * std::pow(y, it->first.q2);
  ev.value = sum * std::exp(sol.r0 * std::log(x) + sol.s0 * std::log(y));
  return ev;
}

inline Complex eval_solution(const FrobeniusSolution& sol, double x, double y) {
  return eval_solution_checked(sol, x, y).value;
}

}  // namespace frob

#endif  // FROBENIUS_VERIFY_HPP
