#include "cauchymix/series.hpp"

#include <algorithm>

#include "cauchymix/errors.hpp"

namespace cauchymix {

Series::Series(int order) {
  if (order < 0) throw Error("Series: negative truncation order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("Series: empty coefficient list");
}

Series Series::one(int order) {
  Series s(order);
  s.set(0, Rational(1));
  return s;
}

Series Series::t(int order) {
  Series s(order);
  if (order < 1) throw Error("Series: t needs order >= 1");
  s.set(1, Rational(1));
  return s;
}

Series Series::log1p(int order) {
  Series s(order);
  for (int j = 1; j <= order; ++j)
    s.set(j, Rational((j % 2 == 0) ? -1 : 1, j));
  return s;
}

Series Series::exp(int order) {
  Series s(order);
  Rational f(1);
  s.set(0, f);
  for (int j = 1; j <= order; ++j) {
    f /= Rational(j);
    s.set(j, f);
  }
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

std::optional<int> Series::first_nonzero() const {
  for (int j = 0; j <= order(); ++j)
    if (!c_[static_cast<size_t>(j)].is_zero()) return j;
  return std::nullopt;
}

Series Series::truncated(int m) const {
  if (m < 0 || m > order()) throw Error("Series: bad truncation target");
  Series s(m);
  for (int j = 0; j <= m; ++j) s.set(j, (*this)[j]);
  return s;
}

Series operator+(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series s(n);
  for (int j = 0; j <= n; ++j) s.set(j, a[j] + b[j]);
  return s;
}

Series operator-(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series s(n);
  for (int j = 0; j <= n; ++j) s.set(j, a[j] - b[j]);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series s(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      s.set(i + j, s[i + j] + a[i] * b[j]);
    }
  }
  return s;
}

Series Series::operator*(const Rational& c) const {
  Series s(order());
  for (int j = 0; j <= order(); ++j) s.set(j, c_[static_cast<size_t>(j)] * c);
  return s;
}

Series Series::operator-() const { return *this * Rational(-1); }

Series Series::inverse() const {
  if (!is_invertible())
    throw DivisionByNonUnit("Series: inverse of a series with zero constant term");
  int n = order();
  Series s(n);
  s.set(0, Rational(1) / c_[0]);
  for (int j = 1; j <= n; ++j) {
    Rational acc(0);
    for (int i = 1; i <= j; ++i) acc += c_[static_cast<size_t>(i)] * s[j - i];
    s.set(j, -acc / c_[0]);
  }
  return s;
}

Series Series::div(const Series& b) const {
  if (!b.is_invertible())
    throw DivisionByNonUnit("Series: division by a non-unit series");
  return *this * b.inverse();
}

Series Series::div_cancel(const Series& b) const {
  auto oa = first_nonzero();
  auto ob = b.first_nonzero();
  if (!ob) throw DivisionByNonUnit("Series: division by the zero series");
  int m = oa ? std::min(*oa, *ob) : *ob;
  if (m == 0) return div(b);
  int n = std::min(order(), b.order()) - m;
  Series num(n), den(n);
  for (int j = 0; j <= n; ++j) {
    num.set(j, (*this)[j + m]);
    den.set(j, b[j + m]);
  }
  if (!den.is_invertible())
    throw DivisionByNonUnit("Series: denominator not a unit after cancellation");
  return num.div(den);
}

Series Series::compose(const Series& inner) const {
  if (!inner[0].is_zero())
    throw ComposeWithUnit("Series: composition with a unit inner series");
  int n = std::min(order(), inner.order());
  Series res(n);
  Series pw = Series::one(n);
  Series in = inner.truncated(n);
  for (int k = 0; k <= n; ++k) {
    if (!c_[static_cast<size_t>(k)].is_zero())
      res = res + pw * c_[static_cast<size_t>(k)];
    if (k < n) pw = pw * in;
  }
  return res;
}

Series Series::comp_inverse() const {
  if (!is_delta()) throw NotDelta("Series: compositional inverse needs a delta series");
  int n = order();
  Series g(n);
  g.set(1, Rational(1) / c_[1]);
  // Pick g_j so that [t^j] f(g(t)) vanishes, one order at a time.
  for (int j = 2; j <= n; ++j) {
    Series probe = compose(g);
    g.set(j, -probe[j] / c_[1]);
  }
  return g;
}

Series Series::pow(long m) const {
  if (m < 0) {
    if (!is_invertible())
      throw DivisionByNonUnit("Series: negative power of a non-unit series");
    return inverse().pow(-m);
  }
  Series r = Series::one(order());
  for (long i = 0; i < m; ++i) r = r * *this;
  return r;
}

Series Series::derivative() const {
  int n = std::max(order() - 1, 0);
  Series s(n);
  for (int j = 0; j < order() && j <= n; ++j)
    s.set(j, (*this)[j + 1] * Rational(j + 1));
  return s;
}

}  // namespace cauchymix
