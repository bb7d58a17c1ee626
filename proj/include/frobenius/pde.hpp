#ifndef FROBENIUS_PDE_HPP
#define FROBENIUS_PDE_HPP

#include <algorithm>

#include "multiseries.hpp"

namespace frob {

/// A x^2 z_xx + B xy z_xy + C y^2 z_yy + x a(x,y) z_x + y b(x,y) z_y + c(x,y) z = 0
/// with constant A, B, C and analytic a, b, c truncated at a common order.
struct RegularSingularPDE {
  Complex A{}, B{}, C{};
  CSeries2 a, b, c;

  RegularSingularPDE() = default;
  RegularSingularPDE(Complex A_, Complex B_, Complex C_, const CSeries2& a_, const CSeries2& b_, const CSeries2& c_)
      : A(A_), B(B_), C(C_) {
    const int n = std::min({a_.order(), b_.order(), c_.order()});
    a = a_.truncated(n);
    b = b_.truncated(n);
    c = c_.truncated(n);
  }

  int order() const noexcept { return a.order(); }

  /// Highest total degree with a nonzero coefficient across a, b, c.
  int perturbation_degree() const noexcept { return std::max({a.degree(), b.degree(), c.degree(), 0}); }
};

}  // namespace frob

#endif  // FROBENIUS_PDE_HPP
