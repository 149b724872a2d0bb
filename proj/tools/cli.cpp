#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "tunnel/derivations.hpp"
#include "tunnel/errors.hpp"
#include "tunnel/oscillator.hpp"
#include "tunnel/table.hpp"

namespace tunnel::cli {

namespace {

constexpr std::array<double, 5> kValidationAbscissae = {1.0, 1.1, 1.5, 2.0, 3.0};

std::string fixed(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& c) {
  const bool needs_n = c.subcommand == Subcommand::exact || c.subcommand == Subcommand::asym ||
                       c.subcommand == Subcommand::table;
  if (needs_n && c.n_list.empty()) throw UsageError("at least one n is required (positional or --ns)");
  if (std::any_of(c.n_list.begin(), c.n_list.end(), [](std::int64_t n) { return n < 0; }))
    throw UsageError("n must be non-negative");
  if (!(c.tol >= kMinTolerance && c.tol <= kMaxTolerance)) throw UsageError("--tol must lie in [1e-15, 1e-3]");
  if (c.subcommand == Subcommand::coeffs) {
    if (c.order < 1 || c.order > kMaxDerivationOrder) throw UsageError("--order must lie in [1, 30]");
    if (c.which != "alpha" && c.which != "beta" && c.which != "a1" && c.which != "inversion")
      throw UsageError("--which must be one of alpha, beta, a1, inversion");
  }
}

// Writes CSV either to `out` ("-") or to the configured path.
void emit_csv(const RunConfig& c, const std::string& csv, std::ostream& out) {
  if (c.csv_path == "-") {
    out << csv;
    return;
  }
  std::ofstream file(c.csv_path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.csv_path + "' for writing");
  file << csv;
}

void run_exact(const RunConfig& c, std::ostream& out) {
  std::ostringstream csv;
  csv << "n,p_exact,abs_error_estimate\n";
  if (c.output == OutputFormat::text) out << "n, P_tun, abs_error_estimate, panels\n";
  for (const auto n : c.n_list) {
    const OscillatorMode mode(n);
    const QuadratureResult q = tunnel_integral(mode, c.tol);
    const double p = 2.0 * q.value;
    const double e = 2.0 * q.abs_error_estimate;
    if (c.output == OutputFormat::text)
      out << n << ", " << fixed("%.15g", p) << ", " << format_scientific(e, 2) << ", " << q.panels_used << '\n';
    csv << n << ',' << fixed("%.15g", p) << ',' << fixed("%.3e", e) << '\n';
  }
  if (c.output == OutputFormat::csv) emit_csv(c, csv.str(), out);
}

void run_asym(const RunConfig& c, std::ostream& out) {
  std::ostringstream csv;
  csv << "n,form,p_asym,last_term_estimate\n";
  for (const auto n : c.n_list) {
    const OscillatorMode mode(n);
    if (n < 1) throw UsageError("asym requires n >= 1");
    const ExpansionResult r = tunnel_probability_asym(mode, c.form);
    if (c.output == OutputFormat::text) {
      out << "n = " << n << ", nu = " << fixed("%.12g", mode.nu()) << ", form = " << to_string(c.form) << '\n';
      out << "P_asym = " << fixed("%.15g", r.value) << '\n';
      for (const auto& t : r.terms) out << "  " << t.label << "  " << fixed("%+.15e", t.value) << '\n';
      out << "last term estimate = " << format_scientific(r.last_term_estimate, 3) << '\n';
    }
    csv << n << ',' << to_string(c.form) << ',' << fixed("%.15g", r.value) << ','
        << fixed("%.3e", r.last_term_estimate) << '\n';
  }
  if (c.output == OutputFormat::csv) emit_csv(c, csv.str(), out);
}

void run_table(const RunConfig& c, std::ostream& out) {
  const std::vector<TableRow> rows = relative_error_table(c.n_list, c.tol, c.form);
  if (c.output == OutputFormat::csv)
    emit_csv(c, to_csv(rows), out);
  else
    out << to_text(rows);
}

void run_coeffs(const RunConfig& c, std::ostream& out) {
  TruncatedSeries s = TruncatedSeries::constant(0, 1);
  std::string title;
  if (c.which == "alpha") {
    s = derive_phi_series(c.order);
    title = "alpha_m: phi(zeta) = sum alpha_m zeta^m";
  } else if (c.which == "beta") {
    s = derive_beta_series(c.order);
    title = "beta_m: phi(zeta) b0(zeta) = -sum beta_m zeta^m";
  } else if (c.which == "a1") {
    s = -derive_a1_series(c.order);
    title = "coefficients of -a1(zeta) in powers of zeta";
  } else {
    s = derive_inversion_series(c.order);
    title = "x(zeta) = sum c_m zeta^m";
  }
  std::string exact, decimal;
  for (int k = 0; k < s.size(); ++k) {
    if (k > 0) {
      exact += ", ";
      decimal += ", ";
    }
    exact += s[k].to_string();
    decimal += fixed("%.10g", s[k].to_double());
  }
  out << "# " << title << ", order " << c.order << '\n' << exact << '\n' << decimal << '\n';
}

void run_validate(const RunConfig& c, std::ostream& out) {
  const std::vector<std::int64_t> ns = c.n_list.empty() ? std::vector<std::int64_t>{100, 400} : c.n_list;
  out << "n, x_scaled, psi_recurrence, psi_uniform, rel_deviation\n";
  std::map<std::int64_t, double> worst;
  for (const auto n : ns) {
    const OscillatorMode mode(n);
    double max_dev = 0.0;
    for (const double x : kValidationAbscissae) {
      const ScaledValue exact = eval_psi(mode, mode.nu() * x);
      const ScaledValue approx = uniform_psi_approx(mode, x);
      const double dev = relative_difference(approx, exact);
      max_dev = std::max(max_dev, dev);
      std::ostringstream row;
      row.precision(12);
      row << n << ", " << x << ", " << exact << ", " << approx << ", " << format_scientific(dev, 3);
      out << row.str() << '\n';
    }
    worst[n] = max_dev;
  }
  for (const auto n : ns) out << "max relative deviation n=" << n << ": " << format_scientific(worst[n], 3) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.subcommand) {
      case Subcommand::exact: run_exact(config, out); break;
      case Subcommand::asym: run_asym(config, out); break;
      case Subcommand::table: run_table(config, out); break;
      case Subcommand::coeffs: run_coeffs(config, out); break;
      case Subcommand::validate: run_validate(config, out); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic-oscillator tunnelling probability: quadrature oracle and asymptotic expansions"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::vector<std::int64_t> positional;
  std::string form = "eq42";
  std::string csv_path;

  const auto add_common = [&](CLI::App* sub, bool with_n) {
    if (with_n) {
      sub->add_option("n", positional, "Oscillator indices");
      sub->add_option("--ns", config.n_list, "Comma-separated oscillator indices")->delimiter(',');
    }
    sub->add_option("--tol", config.tol, "Quadrature tolerance in [1e-15, 1e-3]");
    sub->add_option("--csv", csv_path, "Write CSV to this path ('-' for standard output)");
  };

  CLI::App* exact = app.add_subcommand("exact", "Quadrature value of P_tun");
  add_common(exact, true);
  CLI::App* asym = app.add_subcommand("asym", "Asymptotic P_tun with per-term breakdown");
  add_common(asym, true);
  asym->add_option("--form", form, "eq41 | eq42 | numeric42 | jadczyk13");
  CLI::App* table = app.add_subcommand("table", "Exact vs asymptotic relative-error table");
  add_common(table, true);
  table->add_option("--form", form, "eq41 | eq42 | numeric42 | jadczyk13");
  CLI::App* coeffs = app.add_subcommand("coeffs", "Exact expansion coefficients");
  coeffs->add_option("--which", config.which, "alpha | beta | a1 | inversion");
  coeffs->add_option("--order", config.order, "Number of coefficients");
  CLI::App* validate_cmd = app.add_subcommand("validate", "Uniform approximation vs recurrence sweep");
  add_common(validate_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (exact->parsed()) config.subcommand = Subcommand::exact;
  if (asym->parsed()) config.subcommand = Subcommand::asym;
  if (table->parsed()) config.subcommand = Subcommand::table;
  if (coeffs->parsed()) config.subcommand = Subcommand::coeffs;
  if (validate_cmd->parsed()) config.subcommand = Subcommand::validate;

  config.n_list.insert(config.n_list.begin(), positional.begin(), positional.end());
  try {
    config.form = parse_expansion_form(form);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!csv_path.empty()) {
    config.output = OutputFormat::csv;
    config.csv_path = csv_path;
  }
  return run(config, out, err);
}

}  // namespace tunnel::cli
