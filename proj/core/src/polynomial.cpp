#include "cauchymix/polynomial.hpp"

#include <algorithm>

namespace cauchymix {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::x() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational Polynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return c_[static_cast<size_t>(j)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
  for (size_t j = 0; j < c.size(); ++j)
    c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree()) + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> out(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) out[j] = c_[j] * c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Rational Polynomial::eval(const Rational& x0) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
  return r;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * q + Polynomial::constant(*it);
  return r;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<Rational> c(static_cast<size_t>(degree()));
  for (int j = 1; j <= degree(); ++j)
    c[static_cast<size_t>(j - 1)] = c_[static_cast<size_t>(j)] * Rational(j);
  return Polynomial(std::move(c));
}

}  // namespace cauchymix
