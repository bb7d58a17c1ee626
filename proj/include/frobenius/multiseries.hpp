#ifndef FROBENIUS_MULTISERIES_HPP
#define FROBENIUS_MULTISERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"

namespace frob {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Truncated bivariate power series sum_{|Q| <= order} c_Q x^q1 y^q2 with
/// complex coefficients, stored sparsely in canonical order.
class CSeries2 {
 public:
  using Table = std::map<MultiIndex, Complex>;

  CSeries2() = default;
  explicit CSeries2(int order) : order_(std::max(order, 0)) {}

  CSeries2(int order, const Table& terms) : order_(std::max(order, 0)) {
    for (const auto& [q, v] : terms) put(q, v);
  }

  CSeries2(int order, std::initializer_list<std::pair<MultiIndex, Complex>> terms)
      : order_(std::max(order, 0)) {
    for (const auto& [q, v] : terms) put(q, v);
  }

  static CSeries2 constant(Complex c, int order) { return CSeries2(order, {{{0, 0}, c}}); }

  static CSeries2 monomial(int q1, int q2, Complex c, int order) {
    return CSeries2(order, {{{q1, q2}, c}});
  }

  /// Builds from the dense triangular layout (see dense_index).
  static CSeries2 from_dense(int order, const std::vector<Complex>& dense) {
    CSeries2 s(order);
    for (int n = 0; n <= order; ++n)
      for (int q1 = 0; q1 <= n; ++q1) s.put({q1, n - q1}, dense[dense_index(q1, n - q1)]);
    return s;
  }

  int order() const noexcept { return order_; }
  const Table& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Complex coeff(MultiIndex q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Complex{} : it->second;
  }
  Complex coeff(int q1, int q2) const { return coeff(MultiIndex{q1, q2}); }
  Complex constant_term() const { return coeff(0, 0); }

  std::vector<Complex> dense() const {
    std::vector<Complex> d(dense_size(order_));
    for (const auto& [q, v] : terms_) d[dense_index(q.q1, q.q2)] = v;
    return d;
  }

  CSeries2 truncated(int order) const {
    CSeries2 s(std::min(order, order_));
    for (const auto& [q, v] : terms_)
      if (q.norm() <= s.order_) s.terms_.emplace(q, v);
    return s;
  }

  /// Highest total degree carrying a nonzero coefficient, or -1 for the zero series.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.norm(); }

  bool operator==(const CSeries2&) const = default;

 private:
  void put(MultiIndex q, Complex v) {
    if (q.q1 < 0 || q.q2 < 0 || q.norm() > order_) return;
    if (!is_finite(v))
      throw Error(ErrorKind::NonFiniteCoefficient,
                  "coefficient at (" + std::to_string(q.q1) + "," + std::to_string(q.q2) + ") is not finite");
    if (v == Complex{}) return;
    terms_[q] += v;
    if (terms_[q] == Complex{}) terms_.erase(q);
  }

  int order_ = 0;
  Table terms_;
};

inline CSeries2 operator+(const CSeries2& f, const CSeries2& g) {
  const int n = std::min(f.order(), g.order());
  auto d = f.truncated(n).dense();
  for (const auto& [q, v] : g.terms())
    if (q.norm() <= n) d[dense_index(q.q1, q.q2)] += v;
  return CSeries2::from_dense(n, d);
}

inline CSeries2 operator*(Complex c, const CSeries2& f) {
  auto d = f.dense();
  for (auto& v : d) v *= c;
  return CSeries2::from_dense(f.order(), d);
}

inline CSeries2 operator-(const CSeries2& f) { return Complex{-1.0} * f; }
inline CSeries2 operator-(const CSeries2& f, const CSeries2& g) { return f + (-g); }

inline CSeries2 cauchy_mul(const CSeries2& f, const CSeries2& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Complex> d(dense_size(n));
  for (const auto& [p, fv] : f.terms()) {
    if (p.norm() > n) break;
    for (const auto& [q, gv] : g.terms()) {
      if (p.norm() + q.norm() > n) break;
      d[dense_index(p.q1 + q.q1, p.q2 + q.q2)] += fv * gv;
    }
  }
  return CSeries2::from_dense(n, d);
}

inline CSeries2 operator*(const CSeries2& f, const CSeries2& g) { return cauchy_mul(f, g); }

inline CSeries2 reciprocal(const CSeries2& f) {
  const Complex f0 = f.constant_term();
  if (std::abs(f0) == 0.0) throw Error(ErrorKind::ZeroConstantTerm, "reciprocal of a series with zero constant term");
  const int n = f.order();
  std::vector<Complex> g(dense_size(n));
  g[0] = 1.0 / f0;
  for (int m = 1; m <= n; ++m)
    for (int q1 = 0; q1 <= m; ++q1) {
      const int q2 = m - q1;
      Complex acc{};
      for (const auto& [p, fv] : f.terms()) {
        if (p.norm() > m) break;
        if (p.norm() == 0 || p.q1 > q1 || p.q2 > q2) continue;
        acc += fv * g[dense_index(q1 - p.q1, q2 - p.q2)];
      }
      g[dense_index(q1, q2)] = -acc / f0;
    }
  return CSeries2::from_dense(n, g);
}

inline CSeries2 sqrt_series(const CSeries2& f) {
  const Complex f0 = f.constant_term();
  if (std::abs(f0) == 0.0) throw Error(ErrorKind::ZeroConstantTerm, "square root of a series with zero constant term");
  const int n = f.order();
  const auto fd = f.dense();
  std::vector<Complex> g(dense_size(n));
  g[0] = std::sqrt(f0);
  for (int m = 1; m <= n; ++m)
    for (int q1 = 0; q1 <= m; ++q1) {
      const int q2 = m - q1;
      Complex acc = fd[dense_index(q1, q2)];
      for (int i = 0; i <= q1; ++i)
        for (int j = 0; j <= q2; ++j) {
          if ((i == 0 && j == 0) || (i == q1 && j == q2)) continue;
          acc -= g[dense_index(i, j)] * g[dense_index(q1 - i, q2 - j)];
        }
      g[dense_index(q1, q2)] = acc / (2.0 * g[0]);
    }
  return CSeries2::from_dense(n, g);
}

inline CSeries2 exp_series(const CSeries2& f) {
  // With E = x d/dx + y d/dy and g = exp(f): E g = g E f, so
  // |Q| g_Q = sum_{0 < P <= Q} |P| f_P g_{Q-P}.
  const int n = f.order();
  std::vector<Complex> g(dense_size(n));
  g[0] = std::exp(f.constant_term());
  for (int m = 1; m <= n; ++m)
    for (int q1 = 0; q1 <= m; ++q1) {
      const int q2 = m - q1;
      Complex acc{};
      for (const auto& [p, fv] : f.terms()) {
        if (p.norm() > m) break;
        if (p.norm() == 0 || p.q1 > q1 || p.q2 > q2) continue;
        acc += static_cast<double>(p.norm()) * fv * g[dense_index(q1 - p.q1, q2 - p.q2)];
      }
      g[dense_index(q1, q2)] = acc / static_cast<double>(m);
    }
  return CSeries2::from_dense(n, g);
}

inline CSeries2 antiderivative_x(const CSeries2& f) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms())
    if (q.norm() + 1 <= f.order()) t[{q.q1 + 1, q.q2}] = v / static_cast<double>(q.q1 + 1);
  return CSeries2(f.order(), t);
}

/// d/dx; the result keeps the input order (its top layer is then unknown and left zero).
inline CSeries2 derivative_x(const CSeries2& f) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms())
    if (q.q1 > 0) t[{q.q1 - 1, q.q2}] = v * static_cast<double>(q.q1);
  return CSeries2(f.order(), t);
}

inline CSeries2 derivative_y(const CSeries2& f) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms())
    if (q.q2 > 0) t[{q.q1, q.q2 - 1}] = v * static_cast<double>(q.q2);
  return CSeries2(f.order(), t);
}

/// Multiplies by x^k1 y^k2, dropping terms beyond the order.
inline CSeries2 shift(const CSeries2& f, int k1, int k2) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms()) t[{q.q1 + k1, q.q2 + k2}] = v;
  return CSeries2(f.order(), t);
}

/// Divides by x^k1 y^k2; terms that would acquire negative exponents are dropped.
inline CSeries2 unshift(const CSeries2& f, int k1, int k2) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms())
    if (q.q1 >= k1 && q.q2 >= k2) t[{q.q1 - k1, q.q2 - k2}] = v;
  return CSeries2(f.order(), t);
}

/// Exchanges the roles of x and y.
inline CSeries2 swap_xy(const CSeries2& f) {
  CSeries2::Table t;
  for (const auto& [q, v] : f.terms()) t[{q.q2, q.q1}] = v;
  return CSeries2(f.order(), t);
}

enum class Transform { sqrt, exp, antiderivative_x };

inline CSeries2 analytic_transform(const CSeries2& f, Transform mode) {
  switch (mode) {
    case Transform::sqrt: return sqrt_series(f);
    case Transform::exp: return exp_series(f);
    case Transform::antiderivative_x: return antiderivative_x(f);
  }
  return f;
}

/// max_Q |f_Q - g_Q| over |Q| <= min order.
inline double max_abs_diff(const CSeries2& f, const CSeries2& g) {
  const auto d = (f - g).dense();
  double m = 0.0;
  for (const auto& v : d) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs(const CSeries2& f) {
  double m = 0.0;
  for (const auto& [q, v] : f.terms()) m = std::max(m, std::abs(v));
  return m;
}

/// True when every stored key is within the order and no stored value is exactly zero.
inline bool is_canonical(const CSeries2& f) {
  for (const auto& [q, v] : f.terms())
    if (q.q1 < 0 || q.q2 < 0 || q.norm() > f.order() || v == Complex{}) return false;
  return true;
}

}  // namespace frob

#endif  // FROBENIUS_MULTISERIES_HPP
