#ifndef FROBENIUS_MULTI_INDEX_HPP
#define FROBENIUS_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>

namespace frob {

/// Lattice exponent pair Q = (q1, q2).
struct MultiIndex {
  int q1 = 0;
  int q2 = 0;

  constexpr int norm() const noexcept { return q1 + q2; }

  // Canonical order: ascending norm, then ascending q1.
  constexpr std::strong_ordering operator<=>(const MultiIndex& o) const noexcept {
    if (auto c = norm() <=> o.norm(); c != 0) return c;
    return q1 <=> o.q1;
  }
  constexpr bool operator==(const MultiIndex&) const noexcept = default;
};

/// Position of Q in the dense triangular layout, which follows the canonical order.
constexpr std::size_t dense_index(int q1, int q2) noexcept {
  const auto n = static_cast<std::size_t>(q1 + q2);
  return n * (n + 1) / 2 + static_cast<std::size_t>(q1);
}

constexpr std::size_t dense_size(int order) noexcept {
  const auto n = static_cast<std::size_t>(order) + 1;
  return n * (n + 1) / 2;
}

}  // namespace frob

#endif  // FROBENIUS_MULTI_INDEX_HPP
