#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tunnel/asymptotics.hpp"
#include "tunnel/quadrature.hpp"

namespace tunnel::cli {

enum class Subcommand { exact, asym, table, coeffs, validate };
enum class OutputFormat { text, csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::exact;
  std::vector<std::int64_t> n_list;
  ExpansionForm form = ExpansionForm::eq42;
  double tol = kDefaultTolerance;
  OutputFormat output = OutputFormat::text;
  std::string csv_path;  // "-" writes CSV to the output stream
  std::string which = "alpha";
  int order = 5;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

/// Executes a parsed configuration; results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags into a RunConfig and runs it. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tunnel::cli
