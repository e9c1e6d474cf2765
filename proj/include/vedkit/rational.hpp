#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vedkit {

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; every operation is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(int n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den) : v_(num, den) { normalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }

  /// The value as an integer; throws if the denominator is not 1.
  const mpz_class& asInteger() const {
    if (!isInteger()) throw std::domain_error("Rat::asInteger: value " + str() + " is not an integer");
    return v_.get_num();
  }

  long asLong() const {
    const mpz_class& z = asInteger();
    if (!z.fits_slong_p()) throw std::overflow_error("Rat::asLong: out of range");
    return z.get_si();
  }

  double toDouble() const { return v_.get_d(); }

  std::string str() const {
    return isInteger() ? v_.get_num().get_str() : v_.get_str();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.isZero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  void normalize() {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

Rat pow(const Rat& base, unsigned long e);

/// n choose k as an exact integer (GMP-backed).
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace vedkit
