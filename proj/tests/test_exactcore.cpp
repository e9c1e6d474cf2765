#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "vedkit/interpolate.hpp"
#include "vedkit/rational.hpp"
#include "vedkit/rng.hpp"
#include "vedkit/series.hpp"
#include "vedkit/symfunc.hpp"

using namespace vedkit;

namespace {

Rat random_rat(SplitMix64& rng) {
  const long num = static_cast<long>(rng.next() % 41) - 20;
  const long den = 1 + static_cast<long>(rng.next() % 12);
  return Rat(num, den);
}

// p_k = sum r_i^k, the independent side of the Newton identity check
Rat power_sum(const std::vector<Rat>& roots, int k) {
  Rat acc;
  for (const Rat& r : roots) acc += pow(r, static_cast<unsigned long>(k));
  return acc;
}

}  // namespace

TEST_CASE("Rat normalization and exactness") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(2, 4).den() == 2);
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(1, 10) + Rat(2, 10) == Rat(3, 10));  // no float drift ever
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat(7, 1).isInteger());
  CHECK_THROWS_AS(Rat(7, 2).asLong(), std::domain_error);
  CHECK(Rat(-14, 4).str() == "-7/2");
}

TEST_CASE("Rat sums are order-independent") {
  SplitMix64 rng(11);
  std::vector<Rat> vals;
  for (int i = 0; i < 24; ++i) vals.push_back(random_rat(rng));
  Rat forward, backward, shuffled;
  for (const Rat& v : vals) forward += v;
  for (auto it = vals.rbegin(); it != vals.rend(); ++it) backward += *it;
  std::mt19937 g(3);
  std::shuffle(vals.begin(), vals.end(), g);
  for (const Rat& v : vals) shuffled += v;
  CHECK(forward == backward);
  CHECK(forward == shuffled);
}

TEST_CASE("elem_sym basics") {
  std::vector<Rat> empty;
  CHECK(elem_sym(empty, 0) == Rat(1));
  std::vector<Rat> r23{Rat(2), Rat(3)};
  CHECK(elem_sym(r23, 2) == Rat(6));
  std::vector<Rat> rneg{Rat(-2), Rat(-3), Rat(-4)};
  CHECK(elem_sym(rneg, 1) == Rat(-9));
  CHECK(elem_sym(r23, 3) == Rat(0));  // beyond the root count
}

TEST_CASE("elem_sym satisfies the Newton recurrence against power sums") {
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i on random rational multisets
  SplitMix64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int nroots = 1 + static_cast<int>(rng.next() % 10);
    std::vector<Rat> roots;
    for (int i = 0; i < nroots; ++i) roots.push_back(random_rat(rng));
    const std::vector<Rat> e = elem_sym_all(roots, nroots);
    for (int k = 1; k <= nroots; ++k) {
      Rat rhs;
      for (int i = 1; i <= k; ++i) {
        const Rat term = e[static_cast<size_t>(k - i)] * power_sum(roots, i);
        rhs += (i % 2 == 1) ? term : -term;
      }
      CHECK(Rat(k) * e[static_cast<size_t>(k)] == rhs);
    }
  }
}

TEST_CASE("series_inverse on known expansions") {
  const TruncSeries id(std::vector<Rat>{1, 0, 0});
  CHECK(series_inverse(id).coefficients == std::vector<Rat>{1, 0, 0});

  const TruncSeries geom(std::vector<Rat>{1, 1, 0});
  CHECK(series_inverse(geom).coefficients == std::vector<Rat>{1, -1, 1});

  const TruncSeries c(std::vector<Rat>{1, 5, 6});
  CHECK(series_inverse(c).coefficients == std::vector<Rat>{1, -5, 19});

  const TruncSeries zero(std::vector<Rat>{0, 1});
  CHECK_THROWS_WITH_AS(series_inverse(zero), "non-invertible series", std::domain_error);
}

TEST_CASE("series times its inverse is 1 (property)") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = static_cast<int>(rng.next() % 12);
    TruncSeries c(order);
    do { c[0] = random_rat(rng); } while (c[0].isZero());
    for (int k = 1; k <= order; ++k) c[k] = random_rat(rng);
    const TruncSeries prod = series_mul(c, series_inverse(c));
    CHECK(prod[0] == Rat(1));
    for (int k = 1; k <= order; ++k) CHECK(prod[k] == Rat(0));
  }
}

TEST_CASE("interpolate on known polynomials") {
  using P = std::pair<long, Rat>;
  std::vector<P> constant{{0, 1}, {1, 1}};
  CHECK(interpolate(constant) == std::vector<Rat>{1, 0});

  std::vector<P> square{{0, 0}, {1, 1}, {2, 4}};
  CHECK(interpolate(square) == std::vector<Rat>{0, 0, 1});

  std::vector<P> thirteen{{1, 13}, {2, 13}};
  CHECK(interpolate(thirteen) == std::vector<Rat>{13, 0});

  std::vector<P> dup{{1, 1}, {1, 2}};
  CHECK_THROWS_AS(interpolate(dup), std::invalid_argument);
}

TEST_CASE("interpolate reproduces every input point exactly (property)") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const int npts = 1 + static_cast<int>(rng.next() % 8);
    std::vector<std::pair<long, Rat>> pts;
    long x = -static_cast<long>(rng.next() % 5);
    for (int i = 0; i < npts; ++i) {
      pts.emplace_back(x, random_rat(rng));
      x += 1 + static_cast<long>(rng.next() % 3);
    }
    const std::vector<Rat> coeffs = interpolate(pts);
    CHECK(coeffs.size() == pts.size());
    for (const auto& [xi, yi] : pts) CHECK(poly_eval(coeffs, Rat(xi)) == yi);
  }
}

TEST_CASE("forward_diff_order on known sequences") {
  std::vector<Rat> constant{5, 5, 5, 5};
  CHECK(forward_diff_order(constant) == 0);

  std::vector<Rat> squares{1, 4, 9, 16, 25};
  CHECK(forward_diff_order(squares) == 2);

  std::vector<Rat> doubling{1, 2, 4, 8, 16};
  CHECK_FALSE(forward_diff_order(doubling).has_value());  // "not stabilized"
}

TEST_CASE("forward_diff_order detects the degree of random polynomials") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int deg = static_cast<int>(rng.next() % 5);
    std::vector<Rat> coeffs(static_cast<size_t>(deg) + 1);
    for (Rat& c : coeffs) c = random_rat(rng);
    while (coeffs.back().isZero()) coeffs.back() = random_rat(rng);
    std::vector<Rat> values;
    for (long x = 0; x < deg + 4; ++x) values.push_back(poly_eval(coeffs, Rat(x)));
    CHECK(forward_diff_order(values) == deg);
  }
}
