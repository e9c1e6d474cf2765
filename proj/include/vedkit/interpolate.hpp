#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vedkit/rational.hpp"

namespace vedkit {

/// Coefficients (ascending degree, zero-padded to #points entries) of the
/// unique polynomial of degree < #points through the given points.
/// Abscissae must be pairwise distinct.
std::vector<Rat> interpolate(std::span<const std::pair<long, Rat>> points);

/// Horner evaluation of an ascending-degree coefficient vector.
Rat poly_eval(std::span<const Rat> coeffs, const Rat& x);

/// Smallest d such that the d-th forward differences of `values` (taken at
/// consecutive integer arguments) are all equal, i.e. the detected polynomial
/// degree. Returns nullopt ("not stabilized") if no d < #values-1 works.
std::optional<int> forward_diff_order(std::span<const Rat> values);

}  // namespace vedkit
