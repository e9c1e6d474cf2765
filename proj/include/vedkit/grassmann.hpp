#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vedkit/rational.hpp"

namespace vedkit {

/// Dimension bookkeeping for M = sigma_2(v_2(C^n)) in P(Sym^2 C^n).
struct ProblemSize {
  int n;     // dim V
  int m;     // dim M = 2n-2
  int N;     // ambient projective dimension n(n+1)/2 - 1
  int dimG;  // dim Gr_2(C^n) = 2(n-2)
  int dimZ;  // dim of the resolution = m

  explicit ProblemSize(int n_in);
};

/// Integer torus weights t_1..t_n; pairwise distinct so every localization
/// denominator is nonzero.
struct WeightVector {
  std::vector<long> weights;

  static WeightVector standard(int n);  // t_l = l, the deterministic default
  static WeightVector randomDistinct(int n, std::uint64_t seed);

  void validate() const;  // throws on duplicates or size < 3
  int n() const { return static_cast<int>(weights.size()); }
};

/// Torus-fixed point p_{ij} of Gr_2(C^n), 1 <= i < j <= n.
struct GFixedPoint {
  int i;
  int j;
};

/// All C(n,2) fixed points in lexicographic order.
std::vector<GFixedPoint> fixed_points(int n);

/// Equivariant Chern roots of the four tautological bundles restricted to a
/// fixed point. sigma = -1 stores the dual-bundle roots (-t_i etc.); sigma =
/// +1 flips all of them globally.
struct FixedPointRoots {
  std::array<long, 2> rootsUdual;
  std::vector<long> rootsQdual;       // n-2 entries
  std::array<long, 3> rootsSym2Udual; // pairwise sums of the U* roots
  std::vector<long> rootsUQdual;      // 2(n-2) entries
  int sigma;
};

FixedPointRoots roots_at(const GFixedPoint& p, const WeightVector& w, int sigma);

/// prod_{k != i,j} (t_k - t_i)(t_k - t_j): the equivariant Euler class of the
/// tangent space of Gr_2 at p_{ij}. Nonzero for distinct weights.
Rat euler_G(const GFixedPoint& p, const WeightVector& w);

/// Fixed point of the resolution Z: a base point of Gr_2 plus one of the
/// three torus-stable lines of Sym^2 U* above it. xiValue is the restriction
/// of xi = c_1(O_Z(1)), i.e. minus the selected root.
struct ZFixedPoint {
  GFixedPoint base;
  int lineIndex;  // 0..2
  long xiValue;
};

std::vector<ZFixedPoint> z_fixed_points(const WeightVector& w, int sigma);

}  // namespace vedkit
