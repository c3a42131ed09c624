#pragma once

#include <vector>

#include "cauchymix/rational.hpp"

namespace cauchymix {

/// Univariate polynomial in x over Rational, dense coefficients, no trailing
/// zeros. The zero polynomial is the empty coefficient list (degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  /// Takes coefficients by value and trims trailing zeros.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(Rational c);
  /// The monomial x.
  static Polynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^j; zero beyond the degree.
  Rational coeff(int j) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Rational eval(const Rational& x0) const;
  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const;
  Polynomial derivative() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace cauchymix
