#pragma once

#include <optional>
#include <vector>

#include "cauchymix/rational.hpp"

namespace cauchymix {

/// Formal power series in t over Rational, truncated at a fixed order.
/// Coefficients are plain t^j coefficients (not t^j/j!); conversions to the
/// exponential convention happen at module boundaries via explicit n! factors.
class Series {
 public:
  /// Zero series of the given truncation order.
  explicit Series(int order);
  /// Takes coefficients by value; truncation order = coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int order) { return Series(order); }
  static Series one(int order);
  static Series t(int order);
  /// log(1 + t) = t - t^2/2 + t^3/3 - ...
  static Series log1p(int order);
  /// e^t = sum t^j / j!
  static Series exp(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int j) const { return c_[static_cast<size_t>(j)]; }
  void set(int j, Rational v) { c_[static_cast<size_t>(j)] = std::move(v); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient; empty for the zero series.
  std::optional<int> first_nonzero() const;
  bool is_invertible() const { return !c_[0].is_zero(); }
  bool is_delta() const {
    return c_[0].is_zero() && order() >= 1 && !c_[1].is_zero();
  }

  /// Drops the truncation order to m <= order().
  Series truncated(int m) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator*(const Rational& c) const;
  Series operator-() const;
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse; throws DivisionByNonUnit on zero constant term.
  Series inverse() const;
  /// Exact quotient; throws DivisionByNonUnit when b is not invertible.
  Series div(const Series& b) const;
  /// Cancels the maximal common power of t from both operands, then divides.
  /// The result's truncation order drops by the cancelled power.
  Series div_cancel(const Series& b) const;
  /// this(inner(t)); throws ComposeWithUnit unless O(inner) >= 1.
  Series compose(const Series& inner) const;
  /// f_bar with f_bar(f(t)) = t; throws NotDelta unless O(f) = 1.
  Series comp_inverse() const;
  /// Integer power; negative exponents require an invertible base.
  Series pow(long m) const;
  /// Term-wise derivative; truncation order drops by 1.
  Series derivative() const;

 private:
  std::vector<Rational> c_;
};

}  // namespace cauchymix
