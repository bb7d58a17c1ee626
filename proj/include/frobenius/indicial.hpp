#ifndef FROBENIUS_INDICIAL_HPP
#define FROBENIUS_INDICIAL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "multiseries.hpp"
#include "pde.hpp"

namespace frob {

/// P(r,s) = cA r^2 + cB rs + cC s^2 + cD r + cE s + cF.
struct IndicialConic {
  Complex cA{}, cB{}, cC{}, cD{}, cE{}, cF{};

  Complex operator()(Complex r, Complex s) const {
    return cA * r * r + cB * r * s + cC * s * s + cD * r + cE * s + cF;
  }

  std::array<Complex, 6> coefficients() const { return {cA, cB, cC, cD, cE, cF}; }

  double scale() const {
    double m = 0.0;
    for (const auto& v : coefficients()) m = std::max(m, std::abs(v));
    return m;
  }
};

inline IndicialConic indicial_of(const RegularSingularPDE& pde) {
  return {pde.A, pde.B, pde.C, pde.a.constant_term() - pde.A, pde.b.constant_term() - pde.C, pde.c.constant_term()};
}

enum class DiscriminantClass { elliptic, parabolic, hyperbolic };
enum class DegenerateKind { none, two_crossing_lines, parallel_or_repeated_lines };

inline std::string_view to_string(DiscriminantClass c) {
  switch (c) {
    case DiscriminantClass::elliptic: return "elliptic";
    case DiscriminantClass::parabolic: return "parabolic";
    case DiscriminantClass::hyperbolic: return "hyperbolic";
  }
  return "";
}

inline std::string_view to_string(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::none: return "none";
    case DegenerateKind::two_crossing_lines: return "two_crossing_lines";
    case DegenerateKind::parallel_or_repeated_lines: return "parallel_or_repeated_lines";
  }
  return "";
}

struct ConicClass {
  DiscriminantClass discriminant_class = DiscriminantClass::elliptic;
  bool degenerate = false;
  DegenerateKind degenerate_kind = DegenerateKind::none;
  double discriminant = 0.0;  // B^2 - 4AC
  double determinant = 0.0;   // of the symmetric 3x3 matrix
};

struct ClassifyOptions {
  double imag_tol = 1e-12;        // relative to the largest coefficient magnitude
  double degeneracy_tol = 1e-9;   // relative to the cube of the largest magnitude
  double discriminant_tol = 1e-12;  // relative to its square
};

inline ConicClass classify(const IndicialConic& conic, const ClassifyOptions& opt = {}) {
  const double scale = conic.scale();
  for (const auto& v : conic.coefficients())
    if (std::abs(v.imag()) > opt.imag_tol * std::max(scale, 1e-300))
      throw Error(ErrorKind::ComplexCoefficients, "classification needs real conic coefficients");
  const double A = conic.cA.real(), B = conic.cB.real(), C = conic.cC.real();
  const double D = conic.cD.real(), E = conic.cE.real(), F = conic.cF.real();

  ConicClass out;
  out.discriminant = B * B - 4.0 * A * C;
  const double disc_tol = opt.discriminant_tol * scale * scale;
  if (out.discriminant < -disc_tol) out.discriminant_class = DiscriminantClass::elliptic;
  else if (out.discriminant > disc_tol) out.discriminant_class = DiscriminantClass::hyperbolic;
  else out.discriminant_class = DiscriminantClass::parabolic;

  // det [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]
  const double b = B / 2, d = D / 2, e = E / 2;
  out.determinant = A * (C * F - e * e) - b * (b * F - e * d) + d * (b * e - C * d);
  out.degenerate = std::abs(out.determinant) <= opt.degeneracy_tol * scale * scale * scale;
  if (out.degenerate)
    out.degenerate_kind = out.discriminant_class == DiscriminantClass::parabolic
                              ? DegenerateKind::parallel_or_repeated_lines
                              : DegenerateKind::two_crossing_lines;
  return out;
}

/// Roots s of P(r, s) = 0 at fixed r. `all_solutions` is set when P(r, .) vanishes identically.
struct SRoots {
  std::vector<Complex> roots;
  bool all_solutions = false;
};

inline SRoots solve_for_s(const IndicialConic& conic, Complex r) {
  const Complex a = conic.cC;
  const Complex b = conic.cB * r + conic.cE;
  const Complex c = conic.cA * r * r + conic.cD * r + conic.cF;
  SRoots out;
  if (a == Complex{}) {
    if (b == Complex{}) {
      if (c == Complex{}) {
        out.all_solutions = true;
        return out;
      }
      throw Error(ErrorKind::NoSolution, "P(r, s) reduces to a nonzero constant at this r");
    }
    out.roots.push_back(-c / b);
    return out;
  }
  const Complex sq = std::sqrt(b * b - 4.0 * a * c);
  // Cancellation-free form; roots are returned as (-b + sq)/2a then (-b - sq)/2a.
  Complex plus, minus;
  if ((std::conj(b) * sq).real() >= 0.0) {
    const Complex q = -0.5 * (b + sq);
    minus = q / a;
    plus = q == Complex{} ? Complex{} : c / q;
  } else {
    const Complex q = -0.5 * (b - sq);
    plus = q / a;
    minus = q == Complex{} ? Complex{} : c / q;
  }
  out.roots = {plus, minus};
  return out;
}

struct ResonanceHit {
  MultiIndex Q;
  double magnitude = 0.0;
};

struct ResonanceReport {
  Complex r0{}, s0{};
  int N = 0;
  double tol = 0.0;
  std::vector<ResonanceHit> hits;
  int nonresonant_up_to = 0;

  bool clean() const noexcept { return hits.empty(); }
};

inline constexpr double kDefaultResonanceTol = 1e-9;

inline ResonanceReport resonance_scan(const IndicialConic& conic, Complex r0, Complex s0, int N,
                                      double tol = kDefaultResonanceTol) {
  const double base = std::abs(conic(r0, s0));
  if (!(base < tol))
    throw Error(ErrorKind::BasePointNotOnConic, "|P(r0, s0)| = " + std::to_string(base) + " exceeds tolerance");
  ResonanceReport rep;
  rep.r0 = r0;
  rep.s0 = s0;
  rep.N = std::max(N, 0);
  rep.tol = tol;
  rep.nonresonant_up_to = rep.N;
  for (int n = 1; n <= rep.N; ++n)
    for (int q1 = 0; q1 <= n; ++q1) {
      const int q2 = n - q1;
      const double m = std::abs(conic(r0 + static_cast<double>(q1), s0 + static_cast<double>(q2)));
      if (m < tol) {
        if (rep.hits.empty()) rep.nonresonant_up_to = n - 1;
        rep.hits.push_back({{q1, q2}, m});
      }
    }
  return rep;
}

}  // namespace frob

#endif  // FROBENIUS_INDICIAL_HPP
