#include "cauchymix/sequences.hpp"

#include <mutex>
#include <vector>

#include "cauchymix/errors.hpp"
#include "cauchymix/polyseries.hpp"

namespace cauchymix {
namespace seq {

namespace {

// Triangular tables for both kinds, grown on demand under a lock so that
// concurrent callers observe a pure function.
struct StirlingCache {
  std::mutex mu;
  std::vector<std::vector<mpz_class>> s1, s2;

  void grow(int n) {
    if (s1.empty()) {
      s1.push_back({mpz_class(1)});
      s2.push_back({mpz_class(1)});
    }
    while (static_cast<int>(s1.size()) <= n) {
      int row = static_cast<int>(s1.size());
      std::vector<mpz_class> r1(static_cast<size_t>(row) + 1);
      std::vector<mpz_class> r2(static_cast<size_t>(row) + 1);
      for (int l = 0; l <= row; ++l) {
        mpz_class a1 = (l >= 1) ? s1.back()[static_cast<size_t>(l - 1)] : mpz_class(0);
        mpz_class b1 = (l < row) ? s1.back()[static_cast<size_t>(l)] : mpz_class(0);
        r1[static_cast<size_t>(l)] = a1 - (row - 1) * b1;
        mpz_class a2 = (l >= 1) ? s2.back()[static_cast<size_t>(l - 1)] : mpz_class(0);
        mpz_class b2 = (l < row) ? s2.back()[static_cast<size_t>(l)] : mpz_class(0);
        r2[static_cast<size_t>(l)] = l * b2 + a2;
      }
      s1.push_back(std::move(r1));
      s2.push_back(std::move(r2));
    }
  }
};

StirlingCache& cache() {
  static StirlingCache c;
  return c;
}

mpz_class stirling_lookup(bool first, int n, int l) {
  if (n < 0 || l < 0 || l > n)
    throw IndexRange("stirling: need 0 <= l <= n");
  auto& c = cache();
  std::scoped_lock lock(c.mu);
  c.grow(n);
  return first ? c.s1[static_cast<size_t>(n)][static_cast<size_t>(l)]
               : c.s2[static_cast<size_t>(n)][static_cast<size_t>(l)];
}

// (e^t - 1)/t, known exactly: coefficient of t^j is 1/(j+1)!.
Series expm1_over_t(int order) {
  Series s(order);
  Rational f(1);
  for (int j = 0; j <= order; ++j) {
    f /= Rational(j + 1);
    s.set(j, f);
  }
  return s;
}

}  // namespace

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(mpq_class(f));
}

Rational binomial(long a, long b) {
  if (a < 0) throw IndexRange("binomial: negative top index");
  if (b < 0 || b > a) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return Rational(mpq_class(r));
}

Rational multinomial(long a, std::span<const int> parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw MultinomialMismatch("multinomial: negative part");
    sum += p;
  }
  if (sum != a) throw MultinomialMismatch("multinomial: parts do not sum to a");
  Rational r = factorial(static_cast<int>(a));
  for (int p : parts) r /= factorial(p);
  return r;
}

Rational stirling1(int n, int l) {
  return Rational(mpq_class(stirling_lookup(true, n, l)));
}

Rational stirling2(int n, int l) {
  return Rational(mpq_class(stirling_lookup(false, n, l)));
}

Polynomial falling_factorial(int n) {
  if (n < 0) throw IndexRange("falling_factorial: negative index");
  Polynomial p = Polynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i)
    p = p * Polynomial(std::vector<Rational>{Rational(-i), Rational(1)});
  return p;
}

Series lif_series(int k, int order) {
  Series s(order);
  Rational f(1);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) f /= Rational(m);
    s.set(m, f * int_pow(m + 1, -k));
  }
  return s;
}

Series lif_of_neglog(int k, int order) {
  return lif_series(k, order).compose(-Series::log1p(order));
}

Series cauchy2_prefactor(int r, int order) {
  if (r < 0) throw IndexRange("cauchy2_prefactor: negative order r");
  // Both t and (1+t)log(1+t) vanish at order 1; build one order higher so the
  // cancelled quotient comes back at the requested truncation.
  Series log1p = Series::log1p(order + 1);
  Series den = (Series::one(order + 1) + Series::t(order + 1)) * log1p;
  Series base = Series::t(order + 1).div_cancel(den);
  return base.pow(r);
}

Polynomial bernoulli_poly(int n, int alpha) {
  if (n < 0) throw IndexRange("bernoulli_poly: negative degree");
  Series base = expm1_over_t(n);
  Series pref = base.pow(-static_cast<long>(alpha));
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    c[static_cast<size_t>(j)] =
        binomial(n, j) * factorial(n - j) * pref[n - j];
  return Polynomial(std::move(c));
}

Rational bernoulli_value(int n, int alpha, const Rational& x0) {
  return bernoulli_poly(n, alpha).eval(x0);
}

Polynomial frobenius_euler_poly(int n, int alpha, const Rational& lambda) {
  if (n < 0 || alpha < 0) throw IndexRange("frobenius_euler_poly: negative index");
  if (lambda == Rational(1)) throw LambdaUnit("frobenius_euler_poly: lambda = 1");
  Series em = Series::exp(n);
  em.set(0, Rational(1) - lambda);  // e^t - lambda
  Series pref = (em.inverse() * (Rational(1) - lambda)).pow(alpha);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    c[static_cast<size_t>(j)] =
        binomial(n, j) * factorial(n - j) * pref[n - j];
  return Polynomial(std::move(c));
}

Rational frobenius_euler_value(int n, int alpha, const Rational& lambda,
                               const Rational& x0) {
  return frobenius_euler_poly(n, alpha, lambda).eval(x0);
}

Rational cauchy2_number(int n, int r) {
  if (n < 0) throw IndexRange("cauchy2_number: negative index");
  return factorial(n) * cauchy2_prefactor(r, n)[n];
}

Polynomial poly_cauchy2_poly(int n, int k) {
  if (n < 0) throw IndexRange("poly_cauchy2_poly: negative index");
  PolySeries ps = PolySeries::from_exp(Series::log1p(n), lif_of_neglog(k, n));
  return ps.egf_coeff(n);
}

Rational poly_cauchy2_number(int n, int k) {
  return factorial(n) * lif_of_neglog(k, n)[n];
}

Rational poly_cauchy2_value(int n, int k, const Rational& x0) {
  return poly_cauchy2_poly(n, k).eval(x0);
}

}  // namespace seq
}  // namespace cauchymix
