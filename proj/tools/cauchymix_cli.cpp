// Command-line front end: compute mixed-type polynomial values and tables,
// print generating-function series, and run the exact identity suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cauchymix/errors.hpp"
#include "cauchymix/mixed.hpp"
#include "cauchymix/sequences.hpp"
#include "cauchymix/verify.hpp"

namespace {

using cauchymix::Polynomial;
using cauchymix::Rational;
using cauchymix::Series;

// Flag values that fail rational parsing are usage errors (exit 2), not
// domain errors (exit 3).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_flag_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const cauchymix::Error&) {
    throw UsageError("invalid rational flag value: '" + s + "'");
  }
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

std::string join_coeffs(const std::vector<Rational>& cs) {
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += cs[i].str();
  }
  return out;
}

std::vector<Rational> poly_coeffs(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0)};
  return p.coeffs();
}

void run_compute(int n, int r, int k, const std::string& x_flag,
                 const std::string& format, const std::string& out_path) {
  Sink sink(out_path);
  Polynomial p = cauchymix::mixed::mixed_oracle(n, r, k);
  if (!x_flag.empty()) {
    Rational v = p.eval(parse_flag_rational(x_flag));
    if (format == "json") {
      sink.out() << "{\"n\":" << n << ",\"r\":" << r << ",\"k\":" << k
                 << ",\"x\":\"" << x_flag << "\",\"value\":\"" << v.str()
                 << "\"}\n";
    } else if (format == "csv") {
      sink.out() << "n,r,k,x,value\n"
                 << n << ',' << r << ',' << k << ',' << x_flag << ',' << v.str()
                 << '\n';
    } else {
      sink.out() << v.str() << '\n';
    }
    return;
  }
  auto cs = poly_coeffs(p);
  if (format == "json") {
    sink.out() << "{\"n\":" << n << ",\"r\":" << r << ",\"k\":" << k
               << ",\"coeffs\":" << cauchymix::mixed::poly_str(
                      Polynomial(cs))
               << "}\n";
  } else if (format == "csv") {
    sink.out() << "j,coeff\n";
    for (size_t j = 0; j < cs.size(); ++j)
      sink.out() << j << ',' << cs[j].str() << '\n';
  } else {
    sink.out() << join_coeffs(cs) << '\n';
  }
}

void run_table(int n_max, int r, int k, const std::string& format,
               const std::string& out_path) {
  Sink sink(out_path);
  if (n_max < 0) throw cauchymix::ParamDomain("table: n_max must be >= 0");
  std::vector<Rational> values;
  for (int n = 0; n <= n_max; ++n)
    values.push_back(cauchymix::mixed::mixed_number(n, r, k));
  if (format == "json") {
    sink.out() << '[';
    for (int n = 0; n <= n_max; ++n) {
      if (n) sink.out() << ',';
      sink.out() << "{\"n\":" << n << ",\"value\":\""
                 << values[static_cast<size_t>(n)].str() << "\"}";
    }
    sink.out() << "]\n";
  } else if (format == "csv") {
    sink.out() << "n,value\n";
    for (int n = 0; n <= n_max; ++n)
      sink.out() << n << ',' << values[static_cast<size_t>(n)].str() << '\n';
  } else {
    for (int n = 0; n <= n_max; ++n)
      sink.out() << n << ' ' << values[static_cast<size_t>(n)].str() << '\n';
  }
}

void run_series(const std::string& name, int r, int k, int order,
                const std::string& format, const std::string& out_path) {
  Sink sink(out_path);
  Series s = [&] {
    if (name == "cauchy2_prefactor") return cauchymix::seq::cauchy2_prefactor(r, order);
    if (name == "lif") return cauchymix::seq::lif_series(k, order);
    if (name == "lif_of_neglog") return cauchymix::seq::lif_of_neglog(k, order);
    if (name == "log1p") return Series::log1p(order);
    if (name == "mixed_gf") return cauchymix::mixed::mixed_prefactor(r, k, order);
    throw UsageError("unknown series name: '" + name + "'");
  }();
  std::vector<Rational> plain, egf;
  Rational fact(1);
  for (int j = 0; j <= s.order(); ++j) {
    if (j > 0) fact *= Rational(j);
    plain.push_back(s[j]);
    egf.push_back(s[j] * fact);
  }
  if (format == "json") {
    sink.out() << "{\"name\":\"" << name << "\",\"plain\":"
               << cauchymix::mixed::series_str(s) << ",\"egf\":"
               << cauchymix::mixed::series_str(Series(egf)) << "}\n";
  } else if (format == "csv") {
    sink.out() << "j,coeff,egf\n";
    for (size_t j = 0; j < plain.size(); ++j)
      sink.out() << j << ',' << plain[j].str() << ',' << egf[j].str() << '\n';
  } else {
    sink.out() << "plain: " << join_coeffs(plain) << '\n'
               << "egf:   " << join_coeffs(egf) << '\n';
  }
}

int run_verify(int n_max, const std::vector<int>& r_set,
               const std::vector<int>& k_set, const std::vector<int>& s_set,
               const std::vector<std::string>& lambda_flags,
               const std::vector<std::string>& y_flags,
               const std::string& identities, const std::string& format,
               const std::string& out_path) {
  cauchymix::verify::GridSpec grid;
  grid.n_max = n_max;
  if (!r_set.empty()) grid.r_set = r_set;
  if (!k_set.empty()) grid.k_set = k_set;
  if (!s_set.empty()) grid.s_set = s_set;
  if (!lambda_flags.empty()) {
    grid.lambda_set.clear();
    for (const auto& l : lambda_flags)
      grid.lambda_set.push_back(parse_flag_rational(l));
  }
  if (!y_flags.empty()) {
    grid.y_samples.clear();
    for (const auto& y : y_flags)
      grid.y_samples.push_back(parse_flag_rational(y));
  }
  std::vector<std::string> selection;
  if (identities.empty() || identities == "all") {
    selection = cauchymix::verify::all_identities();
  } else {
    std::istringstream is(identities);
    std::string tok;
    while (std::getline(is, tok, ',')) selection.push_back(tok);
  }
  auto report = cauchymix::verify::run_suite(grid, selection);

  Sink sink(out_path);
  if (format == "json") {
    sink.out() << cauchymix::verify::report_to_json(report) << '\n';
  } else {
    sink.out() << "pass: " << report.pass << "\nfail: " << report.fail
               << "\nskipped: " << report.skipped << '\n';
    if (report.first_failure)
      sink.out() << "first failure: " << *report.first_failure << '\n';
  }
  return report.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mixed-type Cauchy / poly-Cauchy polynomial toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  int n = 0, r = 0, k = 0, n_max = 8, s_order = 8;
  std::string x_flag, format = "plain", out_path, series_name, identities;
  std::vector<int> r_set, k_set, s_set;
  std::vector<std::string> lambda_flags, y_flags;

  auto* compute = app.add_subcommand("compute", "one polynomial or value");
  compute->add_option("--n", n, "degree index")->required();
  compute->add_option("--r", r, "Cauchy order");
  compute->add_option("--k", k, "polylog index");
  compute->add_option("--x", x_flag, "evaluation point, rational 'p/q'");
  compute->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));
  compute->add_option("--out", out_path, "output file (default stdout)");
  compute->callback([&] { run_compute(n, r, k, x_flag, format, out_path); });

  auto* table = app.add_subcommand("table", "number table for n = 0..n_max");
  table->add_option("--n-max", n_max, "largest index")->required();
  table->add_option("--r", r, "Cauchy order");
  table->add_option("--k", k, "polylog index");
  table->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));
  table->add_option("--out", out_path);
  table->callback([&] { run_table(n_max, r, k, format, out_path); });

  auto* series = app.add_subcommand("series", "print a generating-function series");
  series->add_option("--name", series_name,
                     "cauchy2_prefactor | lif | lif_of_neglog | log1p | mixed_gf")
      ->required();
  series->add_option("--r", r, "Cauchy order");
  series->add_option("--k", k, "polylog index");
  series->add_option("--order", s_order, "truncation order")->required();
  series->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));
  series->add_option("--out", out_path);
  series->callback([&] {
    if (s_order < 0) throw UsageError("--order must be >= 0");
    run_series(series_name, r, k, s_order, format, out_path);
  });

  auto* verify = app.add_subcommand("verify", "run the exact identity suite");
  verify->add_option("--n-max", n_max, "grid degree bound");
  verify->add_option("--r", r_set, "orders r (repeatable)");
  verify->add_option("--k", k_set, "polylog indices (repeatable)");
  verify->add_option("--s", s_set, "second orders (repeatable)");
  verify->add_option("--lambda", lambda_flags, "Frobenius-Euler lambdas, 'p/q'");
  verify->add_option("--y", y_flags, "addition-formula shifts, 'p/q'");
  verify->add_option("--identities", identities, "comma-separated subset, or 'all'");
  verify->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
  verify->add_option("--out", out_path);
  verify->callback([&] {
    exit_code = run_verify(n_max, r_set, k_set, s_set, lambda_flags, y_flags,
                           identities, format, out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cauchymix::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const cauchymix::Error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
