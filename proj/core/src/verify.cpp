#include "cauchymix/verify.hpp"

#include <algorithm>
#include <sstream>

#include "cauchymix/errors.hpp"
#include "cauchymix/sequences.hpp"
#include "cauchymix/sheffer.hpp"

namespace cauchymix {
namespace verify {

namespace {

const std::vector<std::string> kIdentities = {
    "conjugate", "thm1", "thm2",  "thm3", "cor4", "thm5",
    "eq35",      "thm6", "eq49",  "thm7", "thm8", "eq56",
    "eq34",      "eq24", "eq40",  "recurrence19", "delta34"};

std::string params_nrk(int n, int r, int k) {
  std::ostringstream os;
  os << "n=" << n << ",r=" << r << ",k=" << k;
  return os.str();
}

mixed::IdentityReport poly_report(const std::string& id, std::string params,
                                  const Polynomial& lhs, const Polynomial& rhs) {
  mixed::IdentityReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  rep.lhs = mixed::poly_str(lhs);
  rep.rhs = mixed::poly_str(rhs);
  rep.equal = (lhs == rhs);
  return rep;
}

mixed::IdentityReport skipped_report(const std::string& id, std::string params) {
  mixed::IdentityReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  rep.skipped = true;
  return rep;
}

void json_escape(std::ostringstream& os, const std::string& s) {
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
}

}  // namespace

const std::vector<std::string>& all_identities() { return kIdentities; }

SuiteReport run_suite(const GridSpec& grid,
                      const std::vector<std::string>& identities) {
  if (grid.n_max < 1) throw ConfigError("grid: n_max must be >= 1");
  if (grid.r_set.empty() || grid.k_set.empty() || grid.s_set.empty() ||
      grid.lambda_set.empty() || grid.y_samples.empty())
    throw ConfigError("grid: empty parameter set");
  for (const auto& l : grid.lambda_set)
    if (l == Rational(1)) throw ConfigError("grid: lambda = 1 is not allowed");
  if (identities.empty()) throw ConfigError("empty identity selection");

  std::vector<std::string> selected;
  for (const auto& id : kIdentities) {
    if (std::find(identities.begin(), identities.end(), id) != identities.end())
      selected.push_back(id);
  }
  for (const auto& id : identities)
    if (std::find(kIdentities.begin(), kIdentities.end(), id) == kIdentities.end())
      throw ConfigError("unknown identity: " + id);

  SuiteReport out;
  auto add = [&](mixed::IdentityReport rep) {
    if (rep.skipped) {
      ++out.skipped;
    } else if (rep.equal) {
      ++out.pass;
    } else {
      ++out.fail;
      if (!out.first_failure)
        out.first_failure = rep.identity + " " + rep.params;
    }
    out.reports.push_back(std::move(rep));
  };

  for (const auto& id : selected) {
    if (id == "eq40") {
      for (int k : grid.k_set) {
        std::ostringstream ps;
        ps << "k=" << k << ",order=" << grid.n_max;
        if (grid.n_max < 2)
          add(skipped_report(id, ps.str()));
        else
          add(mixed::eq40_lif_derivative(k, grid.n_max));
      }
      continue;
    }
    for (int n = 0; n <= grid.n_max; ++n) {
      for (int r : grid.r_set) {
        for (int k : grid.k_set) {
          const Polynomial oracle = mixed::mixed_oracle(n, r, k);
          const std::string nrk = params_nrk(n, r, k);
          if (id == "conjugate") {
            Polynomial lhs =
                conjugate_expansion(mixed::mixed_pair(r, k, n + 1), n);
            add(poly_report(id, nrk, lhs, oracle));
          } else if (id == "thm1") {
            add(poly_report(id, nrk, mixed::thm1_closed_form(n, r, k), oracle));
          } else if (id == "thm2") {
            add(poly_report(id, nrk, mixed::thm2_expansion(n, r, k), oracle));
          } else if (id == "thm3") {
            add(poly_report(id, nrk, mixed::thm3_expansion(n, r, k), oracle));
          } else if (id == "cor4") {
            if (r < 1)
              add(skipped_report(id, nrk));
            else
              add(poly_report(id, nrk, mixed::cor4_expansion(n, r, k), oracle));
          } else if (id == "thm5") {
            if (n < 1 || r < 1)
              add(skipped_report(id, nrk));
            else
              add(poly_report(id, nrk, mixed::thm5_recurrence(n, r, k), oracle));
          } else if (id == "eq35") {
            if (n == grid.n_max) continue;  // eq35(n) targets A~_{n+1}
            add(poly_report(id, nrk, mixed::eq35_recurrence(n, r, k),
                            mixed::mixed_oracle(n + 1, r, k)));
          } else if (id == "thm6") {
            for (int m = 1; m <= grid.n_max - 1; ++m) {
              std::ostringstream ps;
              ps << "n=" << n << ",m=" << m << ",r=" << r << ",k=" << k;
              if (m > n - 1)
                add(skipped_report(id, ps.str()));
              else
                add(mixed::thm6_identity(n, m, r, k));
            }
          } else if (id == "eq49") {
            if (n < 1)
              add(skipped_report(id, nrk));
            else
              add(mixed::eq49_derivative(n, r, k));
          } else if (id == "thm7") {
            for (int s : grid.s_set) {
              std::string ps = nrk + ",s=" + std::to_string(s);
              if (r < 1 || s < 1)
                add(skipped_report(id, ps));
              else
                add(poly_report(id, ps,
                                mixed::thm7_bernoulli_basis(n, r, k, s), oracle));
            }
          } else if (id == "thm8") {
            for (int s : grid.s_set) {
              for (const auto& lambda : grid.lambda_set) {
                std::string ps =
                    nrk + ",s=" + std::to_string(s) + ",lambda=" + lambda.str();
                if (r < 1 || s < 1)
                  add(skipped_report(id, ps));
                else
                  add(poly_report(
                      id, ps,
                      mixed::thm8_frobenius_basis(n, r, k, s, lambda), oracle));
              }
            }
          } else if (id == "eq56") {
            add(poly_report(id, nrk, mixed::eq56_falling_basis(n, r, k), oracle));
          } else if (id == "eq34") {
            for (const auto& y : grid.y_samples)
              add(mixed::eq34_addition(n, r, k, y));
          } else if (id == "eq24") {
            add(mixed::eq24_operator_identity(n, r, k));
          } else if (id == "recurrence19") {
            if (n < 1) {
              add(skipped_report(id, nrk));
            } else {
              ShefferPair pair = mixed::mixed_pair(r, k, n + 2);
              Polynomial lhs =
                  sheffer_recurrence_next(pair, mixed::mixed_oracle(n - 1, r, k));
              add(poly_report(id, nrk, lhs, oracle));
            }
          } else if (id == "delta34") {
            if (n < 1) {
              add(skipped_report(id, nrk));
            } else {
              Series f = Series::exp(n) - Series::one(n);
              Polynomial lhs = apply_series(f, oracle);
              Polynomial rhs =
                  mixed::mixed_oracle(n - 1, r, k) * Rational(n);
              add(poly_report(id, nrk, lhs, rhs));
            }
          }
        }
      }
    }
  }
  return out;
}

std::string report_to_json(const SuiteReport& report) {
  std::ostringstream os;
  os << "{\"identities\":[";
  bool first = true;
  for (const auto& rep : report.reports) {
    if (!first) os << ',';
    first = false;
    os << "{\"identity\":\"" << rep.identity << "\",\"params\":\""
       << rep.params << "\",\"equal\":" << (rep.equal ? "true" : "false")
       << ",\"skipped\":" << (rep.skipped ? "true" : "false") << ",\"lhs\":\"";
    json_escape(os, rep.lhs);
    os << "\",\"rhs\":\"";
    json_escape(os, rep.rhs);
    os << "\"}";
  }
  os << "],\"pass\":" << report.pass << ",\"fail\":" << report.fail
     << ",\"skipped\":" << report.skipped << ",\"first_failure\":";
  if (report.first_failure) {
    os << '"';
    json_escape(os, *report.first_failure);
    os << '"';
  } else {
    os << "null";
  }
  os << '}';
  return os.str();
}

}  // namespace verify
}  // namespace cauchymix
