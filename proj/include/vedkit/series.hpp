#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "vedkit/rational.hpp"

namespace vedkit {

/// Power series truncated at a fixed order: coefficients[k] is the degree-k
/// coefficient, k = 0..order. Represents the series modulo degree order+1.
struct TruncSeries {
  std::vector<Rat> coefficients;

  explicit TruncSeries(int order) : coefficients(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  }
  explicit TruncSeries(std::vector<Rat> coeffs) : coefficients(std::move(coeffs)) {
    if (coefficients.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
  }

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const Rat& operator[](int k) const { return coefficients[static_cast<size_t>(k)]; }
  Rat& operator[](int k) { return coefficients[static_cast<size_t>(k)]; }
};

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  const int ord = std::min(a.order(), b.order());
  TruncSeries c(ord);
  for (int i = 0; i <= ord; ++i)
    for (int j = 0; i + j <= ord; ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Multiplicative inverse modulo degree order+1. The constant term must be
/// nonzero.
inline TruncSeries series_inverse(const TruncSeries& c) {
  if (c[0].isZero()) throw std::domain_error("non-invertible series");
  TruncSeries s(c.order());
  s[0] = Rat(1) / c[0];
  for (int k = 1; k <= c.order(); ++k) {
    Rat acc;
    for (int i = 1; i <= k; ++i) acc += c[i] * s[k - i];
    s[k] = -acc / c[0];
  }
  return s;
}

/// Total Chern class prod(1 + r_i x) of a bundle with the given roots,
/// truncated at `order`.
inline TruncSeries series_from_roots(std::span<const Rat> roots, int order) {
  TruncSeries c(order);
  c[0] = 1;
  for (const Rat& r : roots)
    for (int k = order; k >= 1; --k) c[k] += r * c[k - 1];
  return c;
}

}  // namespace vedkit
