#pragma once

#include <vector>

#include "cauchymix/polynomial.hpp"
#include "cauchymix/series.hpp"

namespace cauchymix {

/// A Sheffer pair (g, f): g invertible, f delta. The compositional inverse
/// f_bar is computed at construction; invalid pairs are unconstructible.
class ShefferPair {
 public:
  /// Throws DivisionByNonUnit when g is not invertible, NotDelta when f is
  /// not a delta series, Error when the truncation orders disagree.
  ShefferPair(Series g, Series f);

  const Series& g() const { return g_; }
  const Series& f() const { return f_; }
  const Series& f_bar() const { return f_bar_; }
  int order() const { return g_.order(); }

 private:
  Series g_, f_, f_bar_;
};

/// Lower-triangular change-of-basis matrix between two Sheffer sequences.
struct ConnectionMatrix {
  std::vector<std::vector<Rational>> entries;  // entries[n][m], 0 <= m <= n
  int n_max() const { return static_cast<int>(entries.size()) - 1; }
};

/// Result of checking f(t) s_n(x) = n s_{n-1}(x) across a polynomial list.
struct DeltaActionReport {
  bool ok = true;
  int first_failure = -1;  // index n of the first failing check
};

/// The umbral pairing <f(t)|p(x)>, normalized by <t^k|x^n> = n! delta_{n,k}.
/// Throws TruncationTooShort when order(f) < deg p.
Rational pairing(const Series& f, const Polynomial& p);

/// f(t) acting on p(x) as a differential operator: sum_k [t^k]f * p^(k)(x).
Polynomial apply_series(const Series& f, const Polynomial& p);

/// s_0..s_{n_max} generated from (1/g(f_bar)) e^{x f_bar(t)}.
std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max);

/// s_n via the conjugate representation
/// s_n(x) = sum_j (1/j!) <g(f_bar)^{-1} f_bar^j | x^n> x^j.
Polynomial conjugate_expansion(const ShefferPair& pair, int n);

/// C with s_n(x) = sum_m C[n][m] r_m(x), where s ~ from and r ~ to.
ConnectionMatrix connection_coeffs(const ShefferPair& from,
                                   const ShefferPair& to, int n_max);

/// s_{n+1}(x) = (x - g'(t)/g(t)) (1/f'(t)) s_n(x).
Polynomial sheffer_recurrence_next(const ShefferPair& pair,
                                   const Polynomial& s_n);

/// Checks f(t) s_n = n s_{n-1} for every consecutive pair in polys.
DeltaActionReport delta_action_check(const ShefferPair& pair,
                                     const std::vector<Polynomial>& polys);

}  // namespace cauchymix
