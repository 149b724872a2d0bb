#include "tunnel/exact_coefficient.hpp"

#include <ostream>
#include <sstream>

#include "tunnel/errors.hpp"

namespace tunnel {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;

const mpf_class& cbrt2_float() {
  static const mpf_class value = [] {
    mpf_class x(1.26, kFloatBits);
    for (int i = 0; i < 12; ++i) x = (2 * x + 2 / (x * x)) / 3;
    return x;
  }();
  return value;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Splits a nonzero rational into sign * 2^e * odd_num / odd_den.
struct TwoAdic {
  int sign;
  long e;
  mpz_class odd_num;
  mpz_class odd_den;
};

TwoAdic two_adic(const mpq_class& r) {
  TwoAdic out{sgn(r), 0, abs(r.get_num()), r.get_den()};
  const long vn = static_cast<long>(mpz_scan1(out.odd_num.get_mpz_t(), 0));
  const long vd = static_cast<long>(mpz_scan1(out.odd_den.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(out.odd_num.get_mpz_t(), out.odd_num.get_mpz_t(), vn);
  mpz_fdiv_q_2exp(out.odd_den.get_mpz_t(), out.odd_den.get_mpz_t(), vd);
  out.e = vn - vd;
  return out;
}

mpq_class times_pow2(const mpq_class& r, long e) {
  mpq_class out;
  if (e >= 0)
    mpq_mul_2exp(out.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(out.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return out;
}

// Exact q-th root of a non-negative integer, or false.
bool exact_root(const mpz_class& value, unsigned long q, mpz_class& root) {
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), q) != 0;
}

std::string monomial_text(const mpq_class& r, int slot) {
  if (slot == 0) return r.get_str();
  const TwoAdic t = two_adic(r);
  const long j = 3 * t.e + slot;
  std::string s = t.sign < 0 ? "-" : "";
  if (t.odd_num != 1) s += t.odd_num.get_str() + "*";
  s += "2^(" + std::to_string(j) + "/3)";
  if (t.odd_den != 1) s += "/" + t.odd_den.get_str();
  return s;
}

}  // namespace

ExactCoefficient::ExactCoefficient(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2)
    : c_{c0, c1, c2} {
  for (auto& c : c_) c.canonicalize();
}

ExactCoefficient::ExactCoefficient(long value) : c_{mpq_class(value), mpq_class(0), mpq_class(0)} {}

ExactCoefficient ExactCoefficient::monomial(const mpq_class& r, long k) {
  const long q = floor_div(k, 3);
  const long slot = k - 3 * q;
  ExactCoefficient out;
  auto& c = out.c_[static_cast<std::size_t>(slot)];
  c = times_pow2(r, q);
  c.canonicalize();
  return out;
}

bool ExactCoefficient::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool ExactCoefficient::is_monomial() const {
  return (c_[0] != 0) + (c_[1] != 0) + (c_[2] != 0) <= 1;
}

bool ExactCoefficient::is_rational() const { return c_[1] == 0 && c_[2] == 0; }

ExactCoefficient ExactCoefficient::inverse() const {
  if (is_zero()) throw ZeroLeadingTerm("ExactCoefficient: division by zero");
  const mpq_class& a = c_[0];
  const mpq_class& b = c_[1];
  const mpq_class& c = c_[2];
  // (a + b t + c t^2)^{-1} with t^3 = 2.
  const mpq_class norm = a * a * a + 2 * b * b * b + 4 * c * c * c - 6 * a * b * c;
  return {(a * a - 2 * b * c) / norm, (2 * c * c - a * b) / norm, (b * b - a * c) / norm};
}

ExactCoefficient ExactCoefficient::pow_rational(long p, long q) const {
  if (q <= 0) throw NonRepresentablePower("pow_rational: denominator must be positive");
  if (is_zero()) {
    if (p > 0) return {};
    throw NonRepresentablePower("pow_rational: non-positive power of zero");
  }
  if (!is_monomial())
    throw NonRepresentablePower("pow_rational: " + to_string() + " is not a monomial in 2^(1/3)");
  int slot = 0;
  while (c_[static_cast<std::size_t>(slot)] == 0) ++slot;
  const TwoAdic t = two_adic(c_[static_cast<std::size_t>(slot)]);

  const long thirds = 3 * t.e + slot;
  if ((thirds * p) % q != 0)
    throw NonRepresentablePower("pow_rational: power of 2 leaves Q(2^(1/3))");
  if (t.sign < 0 && q % 2 == 0) throw NonRepresentablePower("pow_rational: even root of a negative value");

  const unsigned long up = static_cast<unsigned long>(p < 0 ? -p : p);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), t.odd_num.get_mpz_t(), up);
  mpz_pow_ui(den.get_mpz_t(), t.odd_den.get_mpz_t(), up);
  mpz_class num_root, den_root;
  if (!exact_root(num, static_cast<unsigned long>(q), num_root) ||
      !exact_root(den, static_cast<unsigned long>(q), den_root))
    throw NonRepresentablePower("pow_rational: odd part has no exact root");

  mpq_class r = p >= 0 ? mpq_class(num_root, den_root) : mpq_class(den_root, num_root);
  r.canonicalize();
  if (t.sign < 0 && (up % 2 == 1)) r = -r;
  return monomial(r, thirds * p / q);
}

double ExactCoefficient::to_double() const {
  const mpf_class& t = cbrt2_float();
  mpf_class sum(0, kFloatBits);
  sum += mpf_class(c_[0], kFloatBits);
  sum += mpf_class(c_[1], kFloatBits) * t;
  sum += mpf_class(c_[2], kFloatBits) * t * t;
  // get_d truncates; adding back the remainder rounds to nearest.
  const double head = sum.get_d();
  const mpf_class rest = sum - mpf_class(head, kFloatBits);
  return head + rest.get_d();
}

std::string ExactCoefficient::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int slot = 0; slot < 3; ++slot) {
    const mpq_class& r = c_[static_cast<std::size_t>(slot)];
    if (r == 0) continue;
    const std::string piece = monomial_text(r, slot);
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

ExactCoefficient ExactCoefficient::operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

ExactCoefficient& ExactCoefficient::operator+=(const ExactCoefficient& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] += rhs.c_[i];
  return *this;
}

ExactCoefficient& ExactCoefficient::operator-=(const ExactCoefficient& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

ExactCoefficient& ExactCoefficient::operator*=(const ExactCoefficient& rhs) {
  const auto& a = c_;
  const auto& b = rhs.c_;
  // Reduce with (2^{1/3})^3 = 2.
  mpq_class r0 = a[0] * b[0] + 2 * (a[1] * b[2] + a[2] * b[1]);
  mpq_class r1 = a[0] * b[1] + a[1] * b[0] + 2 * a[2] * b[2];
  mpq_class r2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  c_ = {std::move(r0), std::move(r1), std::move(r2)};
  return *this;
}

ExactCoefficient& ExactCoefficient::operator/=(const ExactCoefficient& rhs) { return *this *= rhs.inverse(); }

std::ostream& operator<<(std::ostream& os, const ExactCoefficient& c) { return os << c.to_string(); }

}  // namespace tunnel
