#include "vedkit/interpolate.hpp"

#include <algorithm>
#include <stdexcept>

namespace vedkit {

std::vector<Rat> interpolate(std::span<const std::pair<long, Rat>> points) {
  const size_t n = points.size();
  if (n == 0) throw std::invalid_argument("interpolate: no points");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicate abscissae");

  // Newton divided differences, then expansion to the monomial basis.
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);

  // p(x) = dd[0] + dd[1](x-x0) + dd[2](x-x0)(x-x1) + ...
  std::vector<Rat> coeffs(n);
  std::vector<Rat> basis(n);  // running product prod (x - x_i), ascending degree
  basis[0] = 1;
  size_t basis_deg = 0;
  for (size_t k = 0; k < n; ++k) {
    for (size_t d = 0; d <= basis_deg; ++d) coeffs[d] += dd[k] * basis[d];
    if (k + 1 < n) {
      const Rat xk(points[k].first);
      ++basis_deg;
      basis[basis_deg] = basis[basis_deg - 1];
      for (size_t d = basis_deg - 1; d >= 1; --d) basis[d] = basis[d - 1] - xk * basis[d];
      basis[0] = -xk * basis[0];
    }
  }
  return coeffs;
}

Rat poly_eval(std::span<const Rat> coeffs, const Rat& x) {
  Rat acc;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::optional<int> forward_diff_order(std::span<const Rat> values) {
  std::vector<Rat> row(values.begin(), values.end());
  const int max_d = static_cast<int>(values.size()) - 2;
  for (int d = 0; d <= max_d; ++d) {
    if (std::all_of(row.begin() + 1, row.end(), [&](const Rat& v) { return v == row.front(); }))
      return d;
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return std::nullopt;
}

}  // namespace vedkit
