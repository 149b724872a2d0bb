#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tunnel/asymptotics.hpp"
#include "tunnel/quadrature.hpp"

namespace tunnel {

struct TableRow {
  std::int64_t n = 0;
  double p_exact = 0.0;
  double p_asym = 0.0;
  double rel_error = 0.0;  // |p_exact - p_asym| / p_exact

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// One row per n (input order kept), pairing the quadrature value against the
/// chosen closed form. Rows are computed concurrently.
std::vector<TableRow> relative_error_table(const std::vector<std::int64_t>& ns, double tol = kDefaultTolerance,
                                           ExpansionForm form = ExpansionForm::eq42);

/// CSV with header `n,p_exact,p_asym,rel_error`; probabilities with 10
/// significant digits, the error column in scientific notation.
std::string to_csv(const std::vector<TableRow>& rows);
/// Inverse of to_csv; throws std::invalid_argument on malformed input.
std::vector<TableRow> parse_csv(const std::string& text);

/// Human-readable rows "n, p_exact, rel_error" to seven significant digits and a four-digit error,
/// e.g. "10, 0.0601438, 1.323e-5".
std::string to_text(const std::vector<TableRow>& rows);

/// Scientific notation with `digits` after the point and an unpadded exponent: 1.323e-5.
std::string format_scientific(double value, int digits);

}  // namespace tunnel
