#pragma once

#include <span>

#include "cauchymix/polynomial.hpp"
#include "cauchymix/series.hpp"

namespace cauchymix {
namespace seq {

Rational factorial(int n);

/// binomial(a, b); zero when b < 0 or b > a.
Rational binomial(long a, long b);

/// multinomial(a; parts); throws MultinomialMismatch unless parts sum to a.
Rational multinomial(long a, std::span<const int> parts);

/// Signed Stirling number of the first kind: (x)_n = sum_l S1(n,l) x^l.
/// Memoized triangular cache, thread-safe. Throws IndexRange outside 0<=l<=n.
Rational stirling1(int n, int l);

/// Stirling number of the second kind: partitions of an n-set into l blocks.
Rational stirling2(int n, int l);

/// (x)_n = x(x-1)...(x-n+1); (x)_0 = 1.
Polynomial falling_factorial(int n);

/// Polylogarithm factorial series: coefficient of t^m is 1/(m!(m+1)^k).
Series lif_series(int k, int order);

/// Lif_k(-log(1+t)) to the given truncation order.
Series lif_of_neglog(int k, int order);

/// (t/((1+t)log(1+t)))^r to the given truncation order.
Series cauchy2_prefactor(int r, int order);

/// Higher-order Bernoulli polynomial B_n^{(alpha)}(x); alpha may be negative
/// (the prefactor becomes ((e^t-1)/t)^{|alpha|}).
Polynomial bernoulli_poly(int n, int alpha);
Rational bernoulli_value(int n, int alpha, const Rational& x0);

/// Frobenius-Euler polynomial H_n^{(alpha)}(x|lambda); throws LambdaUnit when
/// lambda = 1.
Polynomial frobenius_euler_poly(int n, int alpha, const Rational& lambda);
Rational frobenius_euler_value(int n, int alpha, const Rational& lambda,
                               const Rational& x0);

/// Cauchy number of the second kind of order r.
Rational cauchy2_number(int n, int r);

/// Poly-Cauchy polynomial of the second kind C~_n^{(k)}(x); the generating
/// variable is t throughout, with (1+t)^x as the exponential factor.
Polynomial poly_cauchy2_poly(int n, int k);
Rational poly_cauchy2_number(int n, int k);
Rational poly_cauchy2_value(int n, int k, const Rational& x0);

}  // namespace seq
}  // namespace cauchymix
