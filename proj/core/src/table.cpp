#include "tunnel/table.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace tunnel {

namespace {

std::string printf_string(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

constexpr const char* kCsvHeader = "n,p_exact,p_asym,rel_error";

}  // namespace

std::vector<TableRow> relative_error_table(const std::vector<std::int64_t>& ns, double tol, ExpansionForm form) {
  std::vector<std::future<TableRow>> pending;
  pending.reserve(ns.size());
  for (const std::int64_t n : ns) {
    pending.push_back(std::async(std::launch::async, [n, tol, form] {
      const OscillatorMode mode(n);
      TableRow row;
      row.n = n;
      row.p_exact = tunnel_probability_exact(mode, tol);
      row.p_asym = tunnel_probability_asym(mode, form).value;
      row.rel_error = std::fabs(row.p_exact - row.p_asym) / row.p_exact;
      return row;
    }));
  }
  std::vector<TableRow> rows;
  rows.reserve(ns.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string format_scientific(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, value);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  const int exponent = std::stoi(s.substr(e + 1));
  return mantissa + "e" + std::to_string(exponent);
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << printf_string("%.10g", r.p_exact) << ',' << printf_string("%.10g", r.p_asym) << ','
       << printf_string("%.9e", r.rel_error) << '\n';
  }
  return os.str();
}

std::vector<TableRow> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::invalid_argument("parse_csv: missing header '" + std::string(kCsvHeader) + "'");
  std::vector<TableRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n, pe, pa, err;
    if (!std::getline(fields, n, ',') || !std::getline(fields, pe, ',') || !std::getline(fields, pa, ',') ||
        !std::getline(fields, err) || err.find(',') != std::string::npos)
      throw std::invalid_argument("parse_csv: expected 4 fields in '" + line + "'");
    try {
      rows.push_back({std::stoll(n), std::stod(pe), std::stod(pa), std::stod(err)});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("parse_csv: malformed number in '" + line + "'");
    }
  }
  return rows;
}

std::string to_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n, P_tun, rel_error\n";
  for (const auto& r : rows) os << r.n << ", " << printf_string("%.6g", r.p_exact) << ", "
                                << format_scientific(r.rel_error, 3) << '\n';
  return os.str();
}

}  // namespace tunnel
