#include "cauchymix/polyseries.hpp"

#include <algorithm>

#include "cauchymix/errors.hpp"

namespace cauchymix {

PolySeries PolySeries::from_exp(const Series& u, const Series& prefactor) {
  if (!u[0].is_zero())
    throw ComposeWithUnit("PolySeries: exponent series has a unit constant term");
  int n = std::min(u.order(), prefactor.order());
  Series ut = u.truncated(n);

  // e^{x u(t)} = sum_j x^j u(t)^j / j!; u^j contributes only to t^m, m >= j.
  std::vector<Polynomial> expo(static_cast<size_t>(n) + 1);
  Series upow = Series::one(n);
  Rational jfact(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) jfact *= Rational(j);
    for (int m = j; m <= n; ++m) {
      if (upow[m].is_zero()) continue;
      std::vector<Rational> mono(static_cast<size_t>(j) + 1);
      mono[static_cast<size_t>(j)] = upow[m] / jfact;
      expo[static_cast<size_t>(m)] = expo[static_cast<size_t>(m)] + Polynomial(std::move(mono));
    }
    if (j < n) upow = upow * ut;
  }

  std::vector<Polynomial> out(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (prefactor[i].is_zero()) continue;
    for (int m = 0; i + m <= n; ++m)
      out[static_cast<size_t>(i + m)] =
          out[static_cast<size_t>(i + m)] + expo[static_cast<size_t>(m)] * prefactor[i];
  }
  return PolySeries(std::move(out));
}

Polynomial PolySeries::egf_coeff(int n) const {
  if (n < 0 || n > order())
    throw TruncationTooShort("PolySeries: coefficient index beyond truncation");
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return c_[static_cast<size_t>(n)] * f;
}

}  // namespace cauchymix
