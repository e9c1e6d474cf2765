#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "vedkit/rational.hpp"

namespace vedkit {

/// All elementary symmetric polynomials e_0..e_maxdeg of the given roots.
/// e_0 = 1 and e_a = 0 for a > #roots.
inline std::vector<Rat> elem_sym_all(std::span<const Rat> roots, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("elem_sym_all: negative degree");
  std::vector<Rat> e(static_cast<size_t>(maxdeg) + 1);
  e[0] = 1;
  for (const Rat& r : roots)
    for (int a = maxdeg; a >= 1; --a) e[static_cast<size_t>(a)] += r * e[static_cast<size_t>(a) - 1];
  return e;
}

/// The a-th elementary symmetric polynomial of the roots.
inline Rat elem_sym(std::span<const Rat> roots, int a) {
  if (a < 0) throw std::invalid_argument("elem_sym: negative index");
  if (a == 0) return Rat(1);
  if (static_cast<size_t>(a) > roots.size()) return Rat(0);
  return elem_sym_all(roots, a)[static_cast<size_t>(a)];
}

}  // namespace vedkit
