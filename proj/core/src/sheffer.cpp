#include "cauchymix/sheffer.hpp"

#include <utility>

#include "cauchymix/errors.hpp"
#include "cauchymix/polyseries.hpp"
#include "cauchymix/sequences.hpp"

namespace cauchymix {

ShefferPair::ShefferPair(Series g, Series f)
    : g_(std::move(g)), f_(std::move(f)), f_bar_(f_.comp_inverse()) {
  if (g_.order() != f_.order())
    throw Error("ShefferPair: g and f must share a truncation order");
  if (!g_.is_invertible())
    throw DivisionByNonUnit("ShefferPair: g is not invertible");
  // comp_inverse already rejected a non-delta f.
}

Rational pairing(const Series& f, const Polynomial& p) {
  if (f.order() < p.degree())
    throw TruncationTooShort("pairing: truncation order below deg p");
  Rational acc(0);
  Rational kfact(1);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) kfact *= Rational(k);
    acc += kfact * f[k] * p.coeff(k);
  }
  return acc;
}

Polynomial apply_series(const Series& f, const Polynomial& p) {
  if (f.order() < p.degree())
    throw TruncationTooShort("apply_series: truncation order below deg p");
  Polynomial acc;
  Polynomial d = p;
  for (int k = 0; k <= f.order() && !d.is_zero(); ++k) {
    if (!f[k].is_zero()) acc = acc + d * f[k];
    d = d.derivative();
  }
  return acc;
}

std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max) {
  if (pair.order() < n_max)
    throw TruncationTooShort("sheffer_polys: pair truncation below n_max");
  Series g_at_fbar = pair.g().compose(pair.f_bar());
  PolySeries ps = PolySeries::from_exp(pair.f_bar(), g_at_fbar.inverse());
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(ps.egf_coeff(n));
  return out;
}

Polynomial conjugate_expansion(const ShefferPair& pair, int n) {
  if (pair.order() < n)
    throw TruncationTooShort("conjugate_expansion: pair truncation below n");
  Series inv_g = pair.g().compose(pair.f_bar()).inverse();
  Polynomial xn(
      [&] {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        c[static_cast<size_t>(n)] = Rational(1);
        return c;
      }());
  Polynomial out;
  Series fbar_pow = Series::one(pair.order());
  Rational jfact(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) jfact *= Rational(j);
    Rational c = pairing(inv_g * fbar_pow, xn) / jfact;
    if (!c.is_zero()) {
      std::vector<Rational> mono(static_cast<size_t>(j) + 1);
      mono[static_cast<size_t>(j)] = c;
      out = out + Polynomial(std::move(mono));
    }
    if (j < n) fbar_pow = fbar_pow * pair.f_bar();
  }
  return out;
}

ConnectionMatrix connection_coeffs(const ShefferPair& from,
                                   const ShefferPair& to, int n_max) {
  if (from.order() < n_max || to.order() < n_max)
    throw TruncationTooShort("connection_coeffs: truncation below n_max");
  Series h_at_fbar = to.g().compose(from.f_bar());
  Series g_at_fbar = from.g().compose(from.f_bar());
  Series l_at_fbar = to.f().compose(from.f_bar());
  Series ratio = h_at_fbar.div(g_at_fbar);

  ConnectionMatrix cm;
  cm.entries.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    cm.entries[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);

  Series lpow = Series::one(from.order());
  Rational mfact(1);
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) mfact *= Rational(m);
    Series kernel = ratio * lpow;
    for (int n = m; n <= n_max; ++n) {
      std::vector<Rational> c(static_cast<size_t>(n) + 1);
      c[static_cast<size_t>(n)] = Rational(1);
      cm.entries[static_cast<size_t>(n)][static_cast<size_t>(m)] =
          pairing(kernel, Polynomial(std::move(c))) / mfact;
    }
    if (m < n_max) lpow = lpow * l_at_fbar;
  }
  return cm;
}

Polynomial sheffer_recurrence_next(const ShefferPair& pair,
                                   const Polynomial& s_n) {
  // Operators act first: u = (1/f') s_n, then x*u - (g'/g) u.
  Series fprime = pair.f().derivative();
  Series gratio = pair.g().derivative().div(pair.g().truncated(pair.order() - 1));
  if (fprime.order() < s_n.degree() + 1)
    throw TruncationTooShort("sheffer_recurrence_next: truncation margin too small");
  Polynomial u = apply_series(fprime.inverse(), s_n);
  return Polynomial::x() * u - apply_series(gratio, u);
}

DeltaActionReport delta_action_check(const ShefferPair& pair,
                                     const std::vector<Polynomial>& polys) {
  DeltaActionReport rep;
  for (size_t n = 1; n < polys.size(); ++n) {
    Polynomial lhs = apply_series(pair.f(), polys[n]);
    Polynomial rhs = polys[n - 1] * Rational(static_cast<long>(n));
    if (!(lhs == rhs)) {
      rep.ok = false;
      rep.first_failure = static_cast<int>(n);
      break;
    }
  }
  return rep;
}

}  // namespace cauchymix
