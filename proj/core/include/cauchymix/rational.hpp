#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "cauchymix/errors.hpp"

namespace cauchymix {

/// Arbitrary-precision rational, always reduced, denominator > 0.
/// Thin value wrapper over GMP's mpq_class; all arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(static_cast<long>(n)) {}   // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" with an optional leading minus on the numerator.
  /// No decimals, no whitespace.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// Integer power; negative exponent requires a nonzero base.
  Rational pow(long e) const;

  /// Canonical form: "p/q" with q > 0, "p" when q = 1, sign on the numerator.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// base^e as an exact rational for integer base and any integer exponent.
Rational int_pow(long base, long e);

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (is_zero()) throw Error("Rational: negative power of zero");
    return (Rational(1) / *this).pow(-e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(std::move(r));
}

inline Rational int_pow(long base, long e) {
  return Rational(base).pow(e);
}

inline Rational Rational::parse(const std::string& s) {
  const auto bad = [&] { throw Error("Rational: cannot parse '" + s + "'"); };
  auto digits = [&](size_t from, size_t to) {
    if (from >= to) bad();
    for (size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') bad();
  };
  size_t slash = s.find('/');
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (slash == std::string::npos) {
    digits(start, s.size());
  } else {
    digits(start, slash);
    digits(slash + 1, s.size());
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) bad();
  if (v.get_den() == 0) bad();
  v.canonicalize();
  return Rational(std::move(v));
}

}  // namespace cauchymix
