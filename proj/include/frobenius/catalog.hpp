#ifndef FROBENIUS_CATALOG_HPP
#define FROBENIUS_CATALOG_HPP

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "expr_parser.hpp"
#include "frobenius.hpp"
#include "indicial.hpp"
#include "multiseries.hpp"
#include "pde.hpp"
#include "verify.hpp"

namespace frob {

enum class Model {
  bessel_I,
  bessel_II,
  airy_I,
  airy_II,
  hermite_I,
  hermite_II,
  legendre_I,
  legendre_II,
  chebyshev_I,
  chebyshev_II,
  laguerre_I,
  laguerre_II,
  disturbed_heat,
};

inline constexpr std::array<Model, 13> kAllModels = {
    Model::bessel_I,    Model::bessel_II,    Model::airy_I,      Model::airy_II,     Model::hermite_I,
    Model::hermite_II,  Model::legendre_I,   Model::legendre_II, Model::chebyshev_I, Model::chebyshev_II,
    Model::laguerre_I,  Model::laguerre_II,  Model::disturbed_heat,
};

struct ModelInfo {
  std::string_view name;
  std::string_view parameter;  // the single parameter, empty if none
  Complex A, B, C;
  std::string_view a, b, c;    // coefficient expressions
  bool normalized;             // a unit factor was divided out
  std::string_view conic;      // human-readable indicial conic
};

inline const ModelInfo& info(Model m) {
  static const std::map<Model, ModelInfo> table = {
      {Model::bessel_I, {"bessel_I", "nu", 1, 2, 1, "1", "1", "x^2 - nu^2", false, "(r+s)^2 - nu^2"}},
      {Model::bessel_II, {"bessel_II", "nu", 1, 0, 1, "1", "1", "x*y - nu^2", false, "r^2 + s^2 - nu^2"}},
      {Model::airy_I, {"airy_I", "", 1, 2, 1, "0", "0", "-x^3", false, "(r+s)(r+s-1)"}},
      {Model::airy_II, {"airy_II", "", 1, 2, 1, "0", "0", "-x^2*y", false, "(r+s)(r+s-1)"}},
      {Model::hermite_I, {"hermite_I", "lam", 1, 2, 1, "-2*x^2", "-2*x^2", "lam*x^2", false, "(r+s)(r+s-1)"}},
      {Model::hermite_II, {"hermite_II", "lam", 1, 2, 1, "-2*x^2", "-2*y^2", "lam*x*y", false, "(r+s)(r+s-1)"}},
      {Model::legendre_I,
       {"legendre_I", "lam", 1, 2, 1, "-2*x^2/(1 - x^2)", "-2*x^2/(1 - x^2)", "lam*(lam + 1)*x^2/(1 - x^2)", true,
        "(r+s)(r+s-1)"}},
      {Model::legendre_II,
       {"legendre_II", "lam", 1, 2, 1, "-2*x^2/(1 - x*y)", "-2*y^2/(1 - x*y)", "lam*(lam + 1)*x*y/(1 - x*y)", true,
        "(r+s)(r+s-1)"}},
      {Model::chebyshev_I,
       {"chebyshev_I", "p", 1, 2, 1, "-x^2/(1 - x^2)", "-x^2/(1 - x^2)", "p^2*x^2/(1 - x^2)", true, "(r+s)(r+s-1)"}},
      {Model::chebyshev_II,
       {"chebyshev_II", "p", 1, 2, 1, "-x^2/(1 - x*y)", "-y^2/(1 - x*y)", "p^2*x*y/(1 - x*y)", true,
        "(r+s)(r+s-1)"}},
      {Model::laguerre_I, {"laguerre_I", "lam", 1, 2, 1, "1 - x", "1 - x", "lam*x", false, "(r+s)^2"}},
      {Model::laguerre_II, {"laguerre_II", "lam", 1, 2, 1, "1 - x*y", "1 - x*y", "lam*x*y", false, "(r+s)^2"}},
      {Model::disturbed_heat, {"disturbed_heat", "a", 0, 0, 0, "a^2 - x*y", "-1", "0", false, "a^2 r^2 - s"}},
  };
  return table.at(m);
}

inline std::string_view model_name(Model m) { return info(m).name; }

inline std::optional<Model> model_from_name(std::string_view name) {
  for (Model m : kAllModels)
    if (info(m).name == name) return m;
  return std::nullopt;
}

struct CatalogEntry {
  Model model = Model::bessel_I;
  ParamTable params;

  bool normalized() const { return info(model).normalized; }
};

namespace detail {

inline Complex required_param(const CatalogEntry& e) {
  const auto& name = info(e.model).parameter;
  auto it = e.params.find(name);
  if (it == e.params.end())
    throw Error(ErrorKind::MissingParameter,
                std::string(model_name(e.model)) + " needs parameter '" + std::string(name) + "'");
  return it->second;
}

}  // namespace detail

inline RegularSingularPDE make_pde(const CatalogEntry& e, int order) {
  if (order < 4) throw Error(ErrorKind::OrderMismatch, "catalog models need order >= 4");
  const auto& mi = info(e.model);
  if (!mi.parameter.empty()) (void)detail::required_param(e);
  Complex A = mi.A, B = mi.B, C = mi.C;
  if (e.model == Model::disturbed_heat) {
    const Complex a = detail::required_param(e);
    A = a * a;
  }
  return RegularSingularPDE(A, B, C, parse_series(mi.a, e.params, order), parse_series(mi.b, e.params, order),
                            parse_series(mi.c, e.params, order));
}

/// The conic each model is documented to have, written out independently of indicial_of.
inline IndicialConic documented_conic(const CatalogEntry& e) {
  switch (e.model) {
    case Model::bessel_I: {
      const Complex nu = detail::required_param(e);
      return {1, 2, 1, 0, 0, -nu * nu};
    }
    case Model::bessel_II: {
      const Complex nu = detail::required_param(e);
      return {1, 0, 1, 0, 0, -nu * nu};
    }
    case Model::laguerre_I:
    case Model::laguerre_II: return {1, 2, 1, 0, 0, 0};
    case Model::disturbed_heat: {
      const Complex a = detail::required_param(e);
      return {a * a, 0, 0, 0, -1, 0};
    }
    default: return {1, 2, 1, -1, -1, 0};
  }
}

namespace detail {

inline Complex checked_div(Complex num, Complex den) {
  if (std::abs(den) == 0.0) throw Error(ErrorKind::ResonantPoint, "closed form divides by zero at this exponent");
  return num / den;
}

// Three-term lattice recurrences on the conic (r+s)(r+s-1), evaluated with a
// local memo table up to |Q|.
template <class Step>
Complex lattice_recurrence(MultiIndex Q, Complex r, Complex s, const Step& step) {
  const int N = Q.norm();
  std::vector<Complex> d(dense_size(N));
  d[0] = 1.0;
  auto get = [&](int i, int j) -> Complex { return (i < 0 || j < 0) ? Complex{} : d[dense_index(i, j)]; };
  for (int n = 1; n <= N; ++n)
    for (int q1 = 0; q1 <= n; ++q1) {
      const int q2 = n - q1;
      const Complex m = static_cast<double>(n) + r + s;
      d[dense_index(q1, q2)] = checked_div(step(q1, q2, get), m * (m - 1.0));
    }
  return d[dense_index(Q.q1, Q.q2)];
}

}  // namespace detail

/// Independent closed-form (or bespoke-recurrence) value of D_Q for a catalog model at (r0, s0).
/// Indices outside the model's support pattern give 0.
inline Complex closed_form_coeff(const CatalogEntry& e, Complex r0, Complex s0, MultiIndex Q) {
  const IndicialConic conic = documented_conic(e);
  if (std::abs(conic(r0, s0)) > 1e-9 * std::max(1.0, conic.scale()))
    throw Error(ErrorKind::BasePointNotOnConic, "exponent pair is not on the model's conic");
  if (Q.q1 < 0 || Q.q2 < 0) throw Error(ErrorKind::UnsupportedIndex, "negative multi-index");
  const Complex sigma = r0 + s0;
  const double one = 1.0;
  using detail::checked_div;

  switch (e.model) {
    case Model::bessel_I: {
      if (Q.q2 != 0 || Q.q1 % 2 != 0) return 0.0;
      const Complex nu = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1 / 2; ++k) {
        const Complex m = sigma + 2.0 * k;
        d = checked_div(-d, m * m - nu * nu);
      }
      return d;
    }
    case Model::bessel_II: {
      if (Q.q1 != Q.q2) return 0.0;
      const Complex nu = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1; ++k) {
        const Complex R = r0 + static_cast<double>(k), S = s0 + static_cast<double>(k);
        d = checked_div(-d, R * R + S * S - nu * nu);
      }
      return d;
    }
    case Model::airy_I:
    case Model::airy_II: {
      int n = 0;
      if (e.model == Model::airy_I) {
        if (Q.q2 != 0 || Q.q1 % 3 != 0) return 0.0;
        n = Q.q1 / 3;
      } else {
        if (Q.q1 != 2 * Q.q2) return 0.0;
        n = Q.q2;
      }
      Complex d = one;
      for (int k = 1; k <= n; ++k) {
        const Complex m = sigma + 3.0 * k;
        d = checked_div(d, m * (m - 1.0));
      }
      return d;
    }
    case Model::hermite_I: {
      if (Q.q2 != 0 || Q.q1 % 2 != 0) return 0.0;
      const Complex lam = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1 / 2; ++k) {
        const Complex m = sigma + 2.0 * k;
        d = checked_div(-(lam - 2.0 * sigma - 4.0 * (k - 1)) * d, m * (m - 1.0));
      }
      return d;
    }
    case Model::legendre_I:
    case Model::chebyshev_I: {
      if (Q.q2 != 0 || Q.q1 % 2 != 0) return 0.0;
      const Complex t = detail::required_param(e);
      Complex d = one;
      for (int k = 0; k < Q.q1 / 2; ++k) {
        const Complex m = sigma + 2.0 * k;
        const Complex num = e.model == Model::legendre_I ? m * (m + 1.0) - t * (t + 1.0) : (m - t) * (m + t);
        d = checked_div(num * d, (m + 1.0) * (m + 2.0));
      }
      return d;
    }
    case Model::laguerre_I: {
      if (Q.q2 != 0) return 0.0;
      const Complex lam = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1; ++k) {
        const Complex m = sigma + static_cast<double>(k);
        d = checked_div((m - 1.0 - lam) * d, m * m);
      }
      return d;
    }
    case Model::laguerre_II: {
      if (Q.q1 != Q.q2) return 0.0;
      const Complex lam = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1; ++k) {
        const Complex m = sigma + 2.0 * k;
        d = checked_div((m - 2.0 - lam) * d, m * m);
      }
      return d;
    }
    case Model::disturbed_heat: {
      if (Q.q1 != Q.q2) return 0.0;
      const Complex a = detail::required_param(e);
      Complex d = one;
      for (int k = 1; k <= Q.q1; ++k) {
        const Complex R = r0 + static_cast<double>(k), S = s0 + static_cast<double>(k);
        d = checked_div((R - 1.0) * d, a * a * R * R - S);
      }
      return d;
    }
    case Model::hermite_II: {
      if (Q.norm() % 2 != 0) return 0.0;
      const Complex lam = detail::required_param(e);
      return detail::lattice_recurrence(Q, r0, s0, [&](int q1, int q2, const auto& get) {
        return 2.0 * (static_cast<double>(q1) + r0 - 2.0) * get(q1 - 2, q2) +
               2.0 * (static_cast<double>(q2) + s0 - 2.0) * get(q1, q2 - 2) - lam * get(q1 - 1, q2 - 1);
      });
    }
    case Model::legendre_II:
    case Model::chebyshev_II: {
      if (Q.norm() % 2 != 0) return 0.0;
      const Complex t = detail::required_param(e);
      const bool leg = e.model == Model::legendre_II;
      const Complex kappa = leg ? t * (t + 1.0) : t * t;
      const double w = leg ? 2.0 : 1.0;
      return detail::lattice_recurrence(Q, r0, s0, [&](int q1, int q2, const auto& get) {
        const Complex m = static_cast<double>(q1 + q2) + sigma;
        return ((m - 2.0) * (m - 3.0) - kappa) * get(q1 - 1, q2 - 1) +
               w * (static_cast<double>(q1) + r0 - 2.0) * get(q1 - 2, q2) +
               w * (static_cast<double>(q2) + s0 - 2.0) * get(q1, q2 - 2);
      });
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Relations between the two-variable Airy solutions and the one-variable y2.

inline constexpr int kAiryRelationOrder = 30;

/// y2(t) = t (1 + sum_{n >= 1} t^{3n} / prod_{k=1}^{n} (3k)(3k+1)), summed to t^{3n} with 3n <= order.
inline double airy_y2(double t, int order = kAiryRelationOrder) {
  double term = 1.0, sum = 1.0;
  for (int n = 1; 3 * n <= order; ++n) {
    term *= t * t * t / ((3.0 * n) * (3.0 * n + 1.0));
    sum += term;
  }
  return t * sum;
}

enum class AiryRelation { airy_I_vs_ode, airy_II_vs_ode };

/// |phi(x, y) - combination of y2| where phi is the engine's solution at (1/2, 1/2).
inline double special_relation_check(AiryRelation which, double x, double y, int order = kAiryRelationOrder) {
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
    throw Error(ErrorKind::OutsideDomain, "relation check needs x, y in (0, 1)");
  if (order < kAiryRelationOrder) throw Error(ErrorKind::OrderMismatch, "relation check needs order >= 30");
  const Model m = which == AiryRelation::airy_I_vs_ode ? Model::airy_I : Model::airy_II;
  const auto pde = make_pde({m, {}}, order);
  const auto sol = solve(pde, 0.5, 0.5, order);
  const double phi = eval_solution(sol, x, y).real();
  double rhs = 0.0;
  if (which == AiryRelation::airy_I_vs_ode) {
    rhs = std::sqrt(y / x) * airy_y2(x, order);
  } else {
    rhs = std::pow(y / x, 1.0 / 6.0) * airy_y2(std::cbrt(x * x * y), order);
  }
  return std::abs(phi - rhs);
}

}  // namespace frob

#endif  // FROBENIUS_CATALOG_HPP
