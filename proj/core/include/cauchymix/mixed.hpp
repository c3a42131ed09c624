#pragma once

#include <string>

#include "cauchymix/polynomial.hpp"
#include "cauchymix/series.hpp"
#include "cauchymix/sheffer.hpp"

namespace cauchymix {
namespace mixed {

/// Outcome of one exact identity check. Equality is exact rational/polynomial
/// equality, never approximate.
struct IdentityReport {
  std::string identity;
  std::string params;
  bool equal = false;
  bool skipped = false;
  std::string lhs;
  std::string rhs;
};

/// (t/((1+t)log(1+t)))^r * Lif_k(-log(1+t)): the generating-function
/// prefactor of the mixed-type polynomials.
Series mixed_prefactor(int r, int k, int order);

/// The Sheffer pair ((t e^t/(e^t-1))^r / Lif_k(-t), e^t - 1) at the given
/// truncation order.
ShefferPair mixed_pair(int r, int k, int order);

/// The oracle: A~_n^{(r,k)}(x) as n! times the t^n coefficient of
/// prefactor * (1+t)^x. Ground truth for every identity below. Memoized.
Polynomial mixed_oracle(int n, int r, int k);

/// A~_n^{(r,k)} = A~_n^{(r,k)}(0).
Rational mixed_number(int n, int r, int k);

/// Triple-sum closed form over Stirling numbers of both kinds.
Polynomial thm1_closed_form(int n, int r, int k);

/// Expansion through the number sequence and S_1.
Polynomial thm2_expansion(int n, int r, int k);

/// Expansion through shifted-order Bernoulli values and poly-Cauchy numbers.
Polynomial thm3_expansion(int n, int r, int k);

/// Composition-sum variant of thm3; throws RequiresPositiveR when r = 0.
Polynomial cor4_expansion(int n, int r, int k);

/// Three-term recurrence RHS; throws ParamDomain when n < 1 or r < 1.
Polynomial thm5_recurrence(int n, int r, int k);

/// Recurrence RHS producing A~_{n+1} from negative-order Bernoulli terms.
Polynomial eq35_recurrence(int n, int r, int k);

/// Double-evaluation identity; requires n-1 >= m >= 1.
IdentityReport thm6_identity(int n, int m, int r, int k);

/// d/dx A~_n against the stated alternating sum; requires n >= 1.
IdentityReport eq49_derivative(int n, int r, int k);

/// Reconstruction in the higher-order Bernoulli basis; r, s >= 1.
Polynomial thm7_bernoulli_basis(int n, int r, int k, int s);

/// Reconstruction in the Frobenius-Euler basis; r, s >= 1, lambda != 1.
Polynomial thm8_frobenius_basis(int n, int r, int k, int s,
                                const Rational& lambda);

/// Reconstruction in the falling-factorial basis.
Polynomial eq56_falling_basis(int n, int r, int k);

/// Addition formula A~_n(x+y) = sum binom(n,j) A~_j(x) (y)_{n-j}.
IdentityReport eq34_addition(int n, int r, int k, const Rational& y);

/// The operator (t e^t/(e^t-1))^r / Lif_k(-t) maps A~_n(x) to (x)_n.
IdentityReport eq24_operator_identity(int n, int r, int k);

/// Derivative of Lif_k(-log(1+t)) against its two-index combination.
IdentityReport eq40_lif_derivative(int k, int order);

/// Canonical serializations used in reports: JSON arrays of rational strings.
std::string poly_str(const Polynomial& p);
std::string series_str(const Series& s);

}  // namespace mixed
}  // namespace cauchymix
