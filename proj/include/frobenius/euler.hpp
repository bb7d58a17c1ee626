#ifndef FROBENIUS_EULER_HPP
#define FROBENIUS_EULER_HPP

#include <array>
#include <cmath>
#include <concepts>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "indicial.hpp"
#include "multiseries.hpp"

namespace frob {

/// A x^2 z_xx + B xy z_xy + C y^2 z_yy + D x z_x + E y z_y + F z = 0.
struct EulerPDE {
  Complex A{}, B{}, C{}, D{}, E{}, F{};

  static EulerPDE from_array(const std::array<Complex, 6>& t) { return {t[0], t[1], t[2], t[3], t[4], t[5]}; }
  std::array<Complex, 6> as_array() const { return {A, B, C, D, E, F}; }
};

inline IndicialConic indicial_of(const EulerPDE& p) { return {p.A, p.B, p.C, p.D - p.A, p.E - p.C, p.F}; }

inline bool monomial_check(const EulerPDE& pde, Complex r, Complex s, double tol = kDefaultResonanceTol) {
  return std::abs(indicial_of(pde)(r, s)) < tol;
}

/// (Re, Im) of x^r y^s for x, y > 0, written with r = r1 + i r2 and s = s1 + i s2.
inline std::pair<double, double> real_monomial_pair(Complex r, Complex s, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw Error(ErrorKind::OutsideDomain, "real monomial pair is defined for x > 0 and y > 0 only");
  const double lx = std::log(x), ly = std::log(y);
  const double modulus = std::pow(x, r.real()) * std::pow(y, s.real());
  const double phase = r.imag() * lx + s.imag() * ly;
  return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

enum class CoordDirection { to_constant, to_euler };

/// Coefficient map under x = e^u, y = e^v: D and E shift by A and C.
template <class T>
std::array<T, 6> euler_coords(const std::array<T, 6>& t, CoordDirection dir) {
  auto out = t;
  if (dir == CoordDirection::to_constant) {
    out[3] = t[3] - t[0];
    out[4] = t[4] - t[2];
  } else {
    out[3] = t[3] + t[0];
    out[4] = t[4] + t[2];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer families with lattice points on their conics.

enum class FamilyKind { elliptic, parabolic, hyperbolic };

template <std::integral T>
struct Family {
  FamilyKind kind = FamilyKind::elliptic;
  T A = 0, B = 0, C = 0;
};

template <std::integral T>
using Point2 = std::array<T, 2>;

template <std::integral T>
struct LatticeLine {
  Point2<T> base{};
  Point2<T> direction{};

  Point2<T> at(T t) const { return {base[0] + t * direction[0], base[1] + t * direction[1]}; }
};

template <std::integral T>
struct IntegralPoints {
  std::vector<Point2<T>> points;
  std::vector<LatticeLine<T>> lines;
};

/// Euler six-tuple (A, B, C, D, E, F) of a family.
template <std::integral T>
std::array<T, 6> family_pde(const Family<T>& f) {
  switch (f.kind) {
    case FamilyKind::elliptic: {
      const T a2 = f.A * f.A, c2 = f.C * f.C;
      return {a2, 0, c2, 3 * a2, 3 * c2, c2 + a2 - a2 * c2};
    }
    case FamilyKind::parabolic: return {f.A, f.B, f.C, 3 * f.A, f.C + f.B, f.A};
    case FamilyKind::hyperbolic: return {f.A, f.B, 0, f.A, f.B, -f.A};
  }
  return {};
}

/// P(r, s) for an integer Euler six-tuple, exactly.
template <std::integral T>
T conic_value(const std::array<T, 6>& p, T r, T s) {
  return p[0] * r * r + p[1] * r * s + p[2] * s * s + (p[3] - p[0]) * r + (p[4] - p[2]) * s + p[5];
}

namespace detail {

template <std::integral T>
T ext_gcd(T a, T b, T& x, T& y) {
  T x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const T q = a / b;
    T t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Integer solutions of a r + b s = c, as base + t * direction; requires (a, b) != (0, 0).
template <std::integral T>
LatticeLine<T> solve_linear(T a, T b, T c) {
  T x = 0, y = 0;
  const T h = ext_gcd(a, b, x, y);
  if (h == 0 || c % h != 0)
    throw Error(ErrorKind::ConstraintViolated, "linear equation has no integer solution");
  const T k = c / h;
  return {{x * k, y * k}, {b / h, -a / h}};
}

}  // namespace detail

template <std::integral T>
IntegralPoints<T> integral_points(const Family<T>& f) {
  IntegralPoints<T> out;
  switch (f.kind) {
    case FamilyKind::elliptic:
      if (!(f.A * f.C > 0)) throw Error(ErrorKind::ConstraintViolated, "elliptic family needs A*C > 0");
      // A^2 (r+1)^2 + C^2 (s+1)^2 = A^2 C^2
      out.points = {{-1 + f.C, -1}, {-1 - f.C, -1}, {-1, -1 + f.A}, {-1, -1 - f.A}};
      return out;
    case FamilyKind::parabolic:
      if (f.B * f.B != 4 * f.A * f.C) throw Error(ErrorKind::ConstraintViolated, "parabolic family needs B^2 = 4AC");
      if (f.A == 0) {
        // B = 0 as well, leaving C s^2 = 0.
        if (f.C == 0) throw Error(ErrorKind::ConstraintViolated, "parabolic family with A = B = C = 0");
        out.lines.push_back({{0, 0}, {1, 0}});
        return out;
      }
      // A P(r, s) = (A r + (B/2) s + A)^2
      out.lines.push_back(detail::solve_linear<T>(2 * f.A, f.B, -2 * f.A));
      return out;
    case FamilyKind::hyperbolic:
      if (f.B == 0) throw Error(ErrorKind::ConstraintViolated, "hyperbolic family needs B != 0");
      // P(r, s) = (r + 1)(A (r - 1) + B s)
      out.lines.push_back({{-1, 0}, {0, 1}});
      out.lines.push_back(detail::solve_linear<T>(f.A, f.B, f.A));
      return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary-value families of the heat, wave and Laplace equations on (0, L).

enum class ClassicalKind { heat, wave_sin_sin, wave_sin_cos, laplace_grow, laplace_decay };

inline std::string_view to_string(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::heat: return "heat";
    case ClassicalKind::wave_sin_sin: return "wave_sin_sin";
    case ClassicalKind::wave_sin_cos: return "wave_sin_cos";
    case ClassicalKind::laplace_grow: return "laplace_grow";
    case ClassicalKind::laplace_decay: return "laplace_decay";
  }
  return "";
}

/// Value and partial derivatives up to second order at a point.
struct Jet {
  double u = 0, ux = 0, uy = 0, uxx = 0, uxy = 0, uyy = 0;
};

/// Constant-coefficient heat, wave and Laplace forms (A, B, C, D, E, F), z_xx etc. with unit weights.
inline std::array<double, 6> heat_constant_form(double a) { return {a * a, 0, 0, 0, -1, 0}; }
inline std::array<double, 6> wave_constant_form(double a) { return {a * a, 0, -1, 0, 0, 0}; }
inline std::array<double, 6> laplace_constant_form() { return {1, 0, 1, 0, 0, 0}; }

namespace detail {

// sin(pi t) and cos(pi t), exact zeros at the integer and half-integer nodes.
inline double sin_pi(double t) {
  t = std::remainder(t, 2.0);
  if (t > 0.5) t = 1.0 - t;
  else if (t < -0.5) t = -1.0 - t;
  return std::sin(std::numbers::pi * t);
}

inline double cos_pi(double t) { return sin_pi(t + 0.5); }

}  // namespace detail

class ClassicalSolution {
 public:
  ClassicalSolution(ClassicalKind kind, int n, double L, double a) : kind_(kind), n_(n), L_(L), a_(a) {
    if (n < 1 || !(L > 0.0) || !(a > 0.0))
      throw Error(ErrorKind::ConstraintViolated, "classical family needs n >= 1, L > 0, a > 0");
    k_ = n * std::numbers::pi / L;
  }

  ClassicalKind kind() const noexcept { return kind_; }
  double length() const noexcept { return L_; }

  /// The constant-coefficient PDE this family solves.
  std::array<double, 6> constant_form() const {
    switch (kind_) {
      case ClassicalKind::heat: return heat_constant_form(a_);
      case ClassicalKind::wave_sin_sin:
      case ClassicalKind::wave_sin_cos: return wave_constant_form(a_);
      default: return laplace_constant_form();
    }
  }

  double operator()(double x, double y) const { return jet(x, y).u; }

  Jet jet(double x, double y) const {
    const double k = k_, t = n_ * x / L_;
    const double sx = detail::sin_pi(t), cx = detail::cos_pi(t);
    Jet j;
    switch (kind_) {
      case ClassicalKind::heat: {
        const double lam = a_ * a_ * k * k;
        const double e = std::exp(-lam * y);
        j.u = e * sx;
        j.ux = k * e * cx;
        j.uy = -lam * j.u;
        j.uxx = -k * k * j.u;
        j.uxy = -lam * j.ux;
        j.uyy = lam * lam * j.u;
        return j;
      }
      case ClassicalKind::wave_sin_sin:
      case ClassicalKind::wave_sin_cos: {
        const double w = k * a_;
        const bool sin_t = kind_ == ClassicalKind::wave_sin_sin;
        const double ty = sin_t ? std::sin(w * y) : std::cos(w * y);
        const double dt = sin_t ? w * std::cos(w * y) : -w * std::sin(w * y);
        j.u = sx * ty;
        j.ux = k * cx * ty;
        j.uy = sx * dt;
        j.uxx = -k * k * j.u;
        j.uxy = k * cx * dt;
        j.uyy = -w * w * j.u;
        return j;
      }
      case ClassicalKind::laplace_grow:
      case ClassicalKind::laplace_decay: {
        const double sgn = kind_ == ClassicalKind::laplace_grow ? 1.0 : -1.0;
        const double e = std::exp(sgn * k * y);
        j.u = e * sx;
        j.ux = k * e * cx;
        j.uy = sgn * k * j.u;
        j.uxx = -k * k * j.u;
        j.uxy = sgn * k * j.ux;
        j.uyy = k * k * j.u;
        return j;
      }
    }
    return j;
  }

  /// A u_xx + B u_xy + C u_yy + D u_x + E u_y + F u from the analytic derivatives.
  double residual(double x, double y) const {
    const auto p = constant_form();
    const auto j = jet(x, y);
    return p[0] * j.uxx + p[1] * j.uxy + p[2] * j.uyy + p[3] * j.ux + p[4] * j.uy + p[5] * j.u;
  }

 private:
  ClassicalKind kind_;
  int n_;
  double L_;
  double a_;
  double k_ = 0.0;
};

inline ClassicalSolution classical_solution(ClassicalKind kind, int n, double L, double a = 1.0) {
  return ClassicalSolution(kind, n, L, a);
}

}  // namespace frob

#endif  // FROBENIUS_EULER_HPP
