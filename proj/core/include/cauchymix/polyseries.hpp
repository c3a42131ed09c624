#pragma once

#include <vector>

#include "cauchymix/polynomial.hpp"
#include "cauchymix/series.hpp"

namespace cauchymix {

/// Truncated series in t whose t^j coefficient is a Polynomial in x.
/// Carrier for generating functions of the form prefactor(t) * e^{x u(t)}.
class PolySeries {
 public:
  /// prefactor(t) * e^{x u(t)}, truncated to min(order(u), order(prefactor)).
  /// Throws ComposeWithUnit when u has a nonzero constant term.
  static PolySeries from_exp(const Series& u, const Series& prefactor);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Polynomial& operator[](int j) const { return c_[static_cast<size_t>(j)]; }

  /// n! times the t^n coefficient: the EGF-convention sequence member s_n(x).
  Polynomial egf_coeff(int n) const;

 private:
  explicit PolySeries(std::vector<Polynomial> c) : c_(std::move(c)) {}
  std::vector<Polynomial> c_;
};

}  // namespace cauchymix
