#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cauchymix/mixed.hpp"
#include "cauchymix/rational.hpp"

namespace cauchymix {
namespace verify {

/// Parameter grid for the identity suite. All comparisons are exact; there is
/// no tolerance anywhere.
struct GridSpec {
  int n_max = 8;
  std::vector<int> r_set{0, 1, 2, 3};
  std::vector<int> k_set{-2, -1, 0, 1, 2, 3};
  std::vector<int> s_set{1, 2, 3};
  std::vector<Rational> lambda_set{Rational(-1), Rational(2), Rational(1, 2)};
  std::vector<Rational> y_samples{Rational(0), Rational(1), Rational(-2),
                                  Rational(1, 2)};
};

struct SuiteReport {
  std::vector<mixed::IdentityReport> reports;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::optional<std::string> first_failure;  // "identity params" of first fail
};

/// Names accepted by the identity selector, in execution order.
const std::vector<std::string>& all_identities();

/// Runs the selected identities over the grid. An empty selector is a
/// ConfigError; pass all_identities() for the full suite. Tuples violating an
/// identity's precondition are recorded as skipped.
SuiteReport run_suite(const GridSpec& grid,
                      const std::vector<std::string>& identities);

/// Deterministic JSON: stable field order, rationals as "p/q" strings.
std::string report_to_json(const SuiteReport& report);

}  // namespace verify
}  // namespace cauchymix
