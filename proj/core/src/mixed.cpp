#include "cauchymix/mixed.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "cauchymix/errors.hpp"
#include "cauchymix/polyseries.hpp"
#include "cauchymix/sequences.hpp"

namespace cauchymix {
namespace mixed {

using seq::binomial;
using seq::factorial;
using seq::stirling1;
using seq::stirling2;

namespace {

Polynomial monomial(int j, Rational c) {
  std::vector<Rational> v(static_cast<size_t>(j) + 1);
  v[static_cast<size_t>(j)] = std::move(c);
  return Polynomial(std::move(v));
}

// x - 1 and friends, for argument-shifted evaluations.
Polynomial shifted_x(long a, long b) {
  return Polynomial(std::vector<Rational>{Rational(a), Rational(b)});
}

struct OracleCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<Polynomial>> tables;
};

OracleCache& oracle_cache() {
  static OracleCache c;
  return c;
}

// Enumerates weak compositions of a into exactly r parts, lexicographically.
void for_each_composition(int a, int r, std::vector<int>& parts, int pos,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == r - 1) {
    parts[static_cast<size_t>(pos)] = a;
    fn(parts);
    return;
  }
  for (int first = 0; first <= a; ++first) {
    parts[static_cast<size_t>(pos)] = first;
    for_each_composition(a - first, r, parts, pos + 1, fn);
  }
}

}  // namespace

std::string poly_str(const Polynomial& p) {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0) os << ',';
    os << '"' << p.coeff(j).str() << '"';
  }
  os << ']';
  return os.str();
}

std::string series_str(const Series& s) {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j <= s.order(); ++j) {
    if (j > 0) os << ',';
    os << '"' << s[j].str() << '"';
  }
  os << ']';
  return os.str();
}

Series mixed_prefactor(int r, int k, int order) {
  return seq::cauchy2_prefactor(r, order) * seq::lif_of_neglog(k, order);
}

ShefferPair mixed_pair(int r, int k, int order) {
  if (r < 0) throw ParamDomain("mixed_pair: r must be >= 0");
  Series et = Series::exp(order + 1);
  Series expm1 = et - Series::one(order + 1);
  Series base = (Series::t(order + 1) * et).div_cancel(expm1);  // t e^t/(e^t-1)
  Series lif_neg_t = seq::lif_series(k, order).compose(-Series::t(order));
  Series g = base.pow(r).div(lif_neg_t);
  Series f = et.truncated(order) - Series::one(order);
  return ShefferPair(std::move(g), std::move(f));
}

Polynomial mixed_oracle(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("mixed_oracle: need n, r >= 0");
  auto& c = oracle_cache();
  std::scoped_lock lock(c.mu);
  auto& table = c.tables[{r, k}];
  if (static_cast<int>(table.size()) <= n) {
    PolySeries ps =
        PolySeries::from_exp(Series::log1p(n), mixed_prefactor(r, k, n));
    table.clear();
    table.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) table.push_back(ps.egf_coeff(i));
  }
  return table[static_cast<size_t>(n)];
}

Rational mixed_number(int n, int r, int k) {
  return mixed_oracle(n, r, k).coeff(0);
}

Polynomial thm1_closed_form(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("thm1: need n, r >= 0");
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Rational tot(0);
    for (int m = j; m <= n; ++m) {
      Rational sgn_m((m % 2 == 0) ? 1 : -1);
      for (int l = 0; l <= m - j; ++l) {
        tot += sgn_m * binomial(m, l) * binomial(m - l, j) /
               binomial(m - l - j + r, r) * int_pow(l + 1, -k) *
               stirling1(n, m) * stirling2(m - l - j + r, r);
      }
    }
    // (-x)^j expanded into the standard basis.
    out = out + monomial(j, tot * Rational((j % 2 == 0) ? 1 : -1));
  }
  return out;
}

Polynomial thm2_expansion(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("thm2: need n, r >= 0");
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Rational c(0);
    for (int l = 0; l <= n - j; ++l)
      c += binomial(n, l) * stirling1(n - l, j) * mixed_number(l, r, k);
    out = out + monomial(j, c);
  }
  return out;
}

Polynomial thm3_expansion(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("thm3: need n, r >= 0");
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Rational c(0);
    for (int l = 0; l <= n - j; ++l) {
      for (int a = 0; a <= n - j - l; ++a) {
        c += binomial(n, l + j) * binomial(n - j - l, a) * stirling1(l + j, j) *
             seq::bernoulli_value(a, a - r + 1, Rational(1 - r)) *
             seq::poly_cauchy2_number(n - j - l - a, k);
      }
    }
    out = out + monomial(j, c);
  }
  return out;
}

Polynomial cor4_expansion(int n, int r, int k) {
  if (r < 1) throw RequiresPositiveR("cor4: needs r >= 1");
  if (n < 0) throw ParamDomain("cor4: need n >= 0");
  std::vector<Rational> bnn(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    bnn[static_cast<size_t>(i)] = seq::bernoulli_value(i, i, Rational(0));
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Rational c(0);
    for (int l = 0; l <= n - j; ++l) {
      for (int a = 0; a <= n - j - l; ++a) {
        Rational inner(0);
        std::vector<int> parts(static_cast<size_t>(r));
        for_each_composition(a, r, parts, 0, [&](const std::vector<int>& p) {
          Rational term = seq::multinomial(a, p);
          for (int ai : p) term *= bnn[static_cast<size_t>(ai)];
          inner += term;
        });
        c += binomial(n, l + j) * binomial(n - j - l, a) * stirling1(l + j, j) *
             inner * seq::poly_cauchy2_number(n - j - l - a, k);
      }
    }
    out = out + monomial(j, c);
  }
  return out;
}

Polynomial thm5_recurrence(int n, int r, int k) {
  if (n < 1 || r < 1) throw ParamDomain("thm5: needs n >= 1 and r >= 1");
  Polynomial rhs =
      Polynomial::x() * mixed_oracle(n - 1, r, k).compose(shifted_x(-1, 1));
  for (int a = 0; a <= n - 1; ++a) {
    Rational c = Rational((a % 2 == 0) ? -1 : 1) * factorial(a) /
                 Rational(a + 2) * binomial(n - 1, a) * Rational(r);
    rhs = rhs + mixed_oracle(n - 1 - a, r + 1, k) * c;
  }
  rhs = rhs + (mixed_oracle(n, r + 1, k - 1) - mixed_oracle(n, r + 1, k)) *
                  Rational(1, n);
  return rhs;
}

Polynomial eq35_recurrence(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("eq35: need n, r >= 0");
  Polynomial rhs =
      Polynomial::x() * mixed_oracle(n, r, k).compose(shifted_x(-1, 1));
  Polynomial sum1, sum2;
  for (int m = 0; m <= n; ++m) {
    for (int l = 0; l <= m; ++l) {
      for (int a = 0; a <= m - l; ++a) {
        Rational c = Rational(((m - a) % 2 == 0) ? 1 : -1) * binomial(m, l) *
                     binomial(m - l, a) /
                     Rational(static_cast<long>(a + 2) * (a + 1)) *
                     int_pow(l + 1, -k) * stirling1(n, m);
        sum1 = sum1 + seq::bernoulli_poly(m - l - a, 1 - r)
                              .compose(shifted_x(2, -1)) *
                          c;
      }
    }
    for (int a = 0; a <= m; ++a) {
      Rational c = Rational((m % 2 == 0) ? 1 : -1) * binomial(m, a) *
                   int_pow(a + 2, -k) * stirling1(n, m);
      sum2 = sum2 +
             seq::bernoulli_poly(m - a, -r).compose(shifted_x(1, -1)) * c;
    }
  }
  return rhs - sum1 * Rational(r) - sum2;
}

IdentityReport thm6_identity(int n, int m, int r, int k) {
  if (!(n - 1 >= m && m >= 1))
    throw ParamDomain("thm6: needs n-1 >= m >= 1");
  Rational lhs(0);
  for (int l = 0; l <= n - m; ++l)
    lhs += binomial(n, l) * stirling1(n - l, m) * mixed_number(l, r, k);

  Rational rhs(0);
  for (int l = 0; l <= n - m - 1; ++l) {
    for (int a = 0; a <= n - l - m - 1; ++a) {
      rhs += Rational((a % 2 == 0) ? -1 : 1) * factorial(a) /
             Rational(a + 2) * binomial(n - 1, l + m) *
             binomial(n - l - m - 1, a) * stirling1(l + m, m) *
             mixed_number(n - l - m - a - 1, r + 1, k) * Rational(r);
    }
  }
  for (int l = 0; l <= n - m - 1; ++l) {
    rhs += Rational(1, n - l - m) * binomial(n - 1, l + m) *
           stirling1(l + m, m) *
           (mixed_number(n - l - m, r + 1, k - 1) -
            mixed_number(n - l - m, r + 1, k));
  }
  for (int l = 0; l <= n - m; ++l) {
    rhs += binomial(n - 1, l + m - 1) * stirling1(l + m - 1, m - 1) *
           mixed_oracle(n - l - m, r, k).eval(Rational(-1));
  }

  IdentityReport rep;
  rep.identity = "thm6";
  std::ostringstream ps;
  ps << "n=" << n << ",m=" << m << ",r=" << r << ",k=" << k;
  rep.params = ps.str();
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.equal = (lhs == rhs);
  return rep;
}

IdentityReport eq49_derivative(int n, int r, int k) {
  if (n < 1) throw ParamDomain("eq49: needs n >= 1");
  Polynomial lhs = mixed_oracle(n, r, k).derivative();
  Polynomial rhs;
  Rational outer = Rational((n % 2 == 0) ? 1 : -1) * factorial(n);
  for (int l = 0; l <= n - 1; ++l) {
    Rational c = outer * Rational((l % 2 == 0) ? -1 : 1) /
                 (Rational(n - l) * factorial(l));
    rhs = rhs + mixed_oracle(l, r, k) * c;
  }
  IdentityReport rep;
  rep.identity = "eq49";
  std::ostringstream ps;
  ps << "n=" << n << ",r=" << r << ",k=" << k;
  rep.params = ps.str();
  rep.lhs = poly_str(lhs);
  rep.rhs = poly_str(rhs);
  rep.equal = (lhs == rhs);
  return rep;
}

Polynomial thm7_bernoulli_basis(int n, int r, int k, int s) {
  if (r < 1 || s < 1) throw ParamDomain("thm7: needs r, s >= 1");
  Polynomial out;
  for (int m = 0; m <= n; ++m) {
    Rational c(0);
    for (int l = 0; l <= n - m; ++l)
      c += binomial(n, l) * stirling1(n - l, m) *
           mixed_oracle(l, r + s, k).eval(Rational(s));
    out = out + seq::bernoulli_poly(m, s) * c;
  }
  return out;
}

Polynomial thm8_frobenius_basis(int n, int r, int k, int s,
                                const Rational& lambda) {
  if (r < 1 || s < 1) throw ParamDomain("thm8: needs r, s >= 1");
  if (lambda == Rational(1)) throw LambdaUnit("thm8: lambda = 1");
  Polynomial out;
  for (int m = 0; m <= n; ++m) {
    Rational c(0);
    for (int l = 0; l <= n - m; ++l) {
      for (int a = 0; a <= l; ++a) {
        c += binomial(n, l) * binomial(s, a) * binomial(l, a) * factorial(a) /
             (Rational(1) - lambda).pow(a) * stirling1(n - l, m) *
             mixed_number(l - a, r, k);
      }
    }
    out = out + seq::frobenius_euler_poly(m, s, lambda) * c;
  }
  return out;
}

Polynomial eq56_falling_basis(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("eq56: need n, r >= 0");
  Polynomial out;
  for (int m = 0; m <= n; ++m)
    out = out + seq::falling_factorial(m) *
                    (binomial(n, m) * mixed_number(n - m, r, k));
  return out;
}

IdentityReport eq34_addition(int n, int r, int k, const Rational& y) {
  Polynomial lhs = mixed_oracle(n, r, k).compose(
      Polynomial(std::vector<Rational>{y, Rational(1)}));
  Polynomial rhs;
  for (int j = 0; j <= n; ++j)
    rhs = rhs + mixed_oracle(j, r, k) *
                    (binomial(n, j) * seq::falling_factorial(n - j).eval(y));
  IdentityReport rep;
  rep.identity = "eq34";
  std::ostringstream ps;
  ps << "n=" << n << ",r=" << r << ",k=" << k << ",y=" << y.str();
  rep.params = ps.str();
  rep.lhs = poly_str(lhs);
  rep.rhs = poly_str(rhs);
  rep.equal = (lhs == rhs);
  return rep;
}

IdentityReport eq24_operator_identity(int n, int r, int k) {
  if (n < 0 || r < 0) throw ParamDomain("eq24: need n, r >= 0");
  ShefferPair pair = mixed_pair(r, k, n + 1);
  Polynomial lhs = apply_series(pair.g(), mixed_oracle(n, r, k));
  Polynomial rhs = seq::falling_factorial(n);
  IdentityReport rep;
  rep.identity = "eq24";
  std::ostringstream ps;
  ps << "n=" << n << ",r=" << r << ",k=" << k;
  rep.params = ps.str();
  rep.lhs = poly_str(lhs);
  rep.rhs = poly_str(rhs);
  rep.equal = (lhs == rhs);
  return rep;
}

IdentityReport eq40_lif_derivative(int k, int order) {
  if (order < 2) throw ParamDomain("eq40: needs order >= 2");
  Series lhs = seq::lif_of_neglog(k, order).derivative();
  Series num = seq::lif_of_neglog(k - 1, order) - seq::lif_of_neglog(k, order);
  Series den =
      (Series::one(order) + Series::t(order)) * Series::log1p(order);
  Series rhs = num.div_cancel(den);
  lhs = lhs.truncated(order - 1);
  rhs = rhs.truncated(order - 1);
  IdentityReport rep;
  rep.identity = "eq40";
  std::ostringstream ps;
  ps << "k=" << k << ",order=" << order;
  rep.params = ps.str();
  rep.lhs = series_str(lhs);
  rep.rhs = series_str(rhs);
  rep.equal = (lhs == rhs);
  return rep;
}

}  // namespace mixed
}  // namespace cauchymix
