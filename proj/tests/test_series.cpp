#include <gtest/gtest.h>

#include <random>

#include "tunnel/errors.hpp"
#include "tunnel/series.hpp"

using namespace tunnel;

namespace {

using EC = ExactCoefficient;

TruncatedSeries make(std::initializer_list<EC> c) { return TruncatedSeries(std::vector<EC>(c), "u"); }

EC q(long p, long d) { return EC(mpq_class(p, d)); }

EC random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  mpq_class a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  return EC(a, b, c);
}

}  // namespace

TEST(ExactCoefficient, CubeOfGenerator) {
  const EC t = EC::cbrt2();
  EXPECT_EQ(t * t * t, EC(2));
  EXPECT_EQ(EC::monomial(1, 3), EC(2));
  EXPECT_EQ(EC::monomial(mpq_class(3, 5), -4), EC(mpq_class(3, 10), 0, 0) * EC::monomial(1, -1));
}

TEST(ExactCoefficient, Inverse) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const EC a = random_coefficient(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), EC(1));
  }
  EXPECT_THROW(EC().inverse(), ZeroLeadingTerm);
}

TEST(ExactCoefficient, RingAxioms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const EC a = random_coefficient(rng), b = random_coefficient(rng), c = random_coefficient(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, EC());
  }
}

TEST(ExactCoefficient, RationalPowers) {
  EXPECT_EQ(EC(4).pow_rational(1, 3), EC::monomial(1, 2));
  EXPECT_EQ(EC(mpq_class(8, 27)).pow_rational(2, 3), EC(mpq_class(4, 9)));
  EXPECT_THROW(EC(3).pow_rational(1, 2), NonRepresentablePower);
  EXPECT_THROW((EC(1) + EC::cbrt2()).pow_rational(1, 3), NonRepresentablePower);
}

TEST(ExactCoefficient, Formatting) {
  EXPECT_EQ(EC::monomial(1, -2).to_string(), "2^(-2/3)");
  EXPECT_EQ(q(-1, 5).to_string(), "-1/5");
  EXPECT_EQ(EC::monomial(mpq_class(1, 35), 5).to_string(), "2^(5/3)/35");
  EXPECT_EQ(EC::monomial(mpq_class(9, 35), -10).to_string(), "9*2^(-10/3)/35");
  EXPECT_EQ(q(1548, 67375).to_string(), "1548/67375");
  EXPECT_EQ(EC(0).to_string(), "0");
  EXPECT_EQ(EC::monomial(1, 1).to_double(), 1.2599210498948732);
}

TEST(TruncatedSeries, Products) {
  const auto a = make({1, 1, 0, 0});
  const auto b = make({1, -1, 0, 0});
  EXPECT_EQ(series_mul(a, b), make({1, 0, -1, 0}));
  EXPECT_EQ((a * make({1, 1})).size(), 2);
  EXPECT_EQ(a.truncated(2), make({1, 1}));
}

TEST(TruncatedSeries, BinomialPowers) {
  const auto s = series_pow_rational(make({1, 1, 0, 0, 0}), 1, 2);
  EXPECT_EQ(s, make({1, q(1, 2), q(-1, 8), q(1, 16), q(-5, 128)}));
  const auto h = series_pow_rational(make({1, q(1, 2), 0, 0}), 1, 2);
  EXPECT_EQ(h, make({1, q(1, 4), q(-1, 32), q(1, 128)}));
  // The constant is factored out and raised exactly.
  const auto c = series_pow_rational(make({4, 4, 0}), 1, 3);
  EXPECT_EQ(c[0], EC::monomial(1, 2));
  EXPECT_THROW(series_pow_rational(make({0, 1, 0}), 1, 2), ZeroLeadingTerm);
  EXPECT_THROW(series_pow_rational(make({3, 1, 0}), 1, 2), NonRepresentablePower);
}

TEST(TruncatedSeries, Division) {
  const auto a = make({1, 2, 3, 4, 5});
  const auto b = make({2, -1, 0, 1, 7});
  EXPECT_EQ(series_mul(series_div(a, b), b), a);
  EXPECT_EQ(series_mul(series_reciprocal(b), b), make({1, 0, 0, 0, 0}));
  EXPECT_THROW(series_div(a, make({0, 1, 1, 1, 1})), ZeroLeadingTerm);
}

TEST(TruncatedSeries, Calculus) {
  const auto s = make({5, 1, 3, 2});
  EXPECT_EQ(s.derivative(), make({1, 6, 6}));
  EXPECT_EQ(s.derivative().integral(), make({0, 1, 3, 2}));
  EXPECT_EQ(s.shift_up(2), make({0, 0, 5, 1, 3, 2}));
  EXPECT_EQ(s.shift_up(2).shift_down(2), s);
  EXPECT_THROW(s.shift_down(1), PoleCancellationFailure);
}

TEST(TruncatedSeries, Composition) {
  // (1 + z)^2 at z = 2u + u^2.
  const auto outer = make({1, 2, 1, 0});
  const auto inner = make({0, 2, 1, 0});
  EXPECT_EQ(series_compose(outer, inner), make({1, 4, 6, 4}));
  EXPECT_THROW(series_compose(outer, make({1, 1, 0, 0})), SeriesError);
}

TEST(TruncatedSeries, Reversion) {
  const auto id = make({0, 1, 0, 0, 0});
  EXPECT_EQ(series_revert(id), id);
  const auto r = series_revert(make({0, 2, 1, 0, 0}));
  EXPECT_EQ(r, make({0, q(1, 2), q(-1, 8), q(1, 16), q(-5, 128)}));
  EXPECT_THROW(series_revert(make({0, 0, 1, 0})), NotInvertible);
  EXPECT_THROW(series_revert(make({1, 1, 0})), SeriesError);
}

TEST(TruncatedSeriesProperty, ReversionIsTwoSidedInverse) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> len(2, 12);
    std::vector<EC> c(static_cast<std::size_t>(len(rng)));
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = random_coefficient(rng);
    if (c[1].is_zero()) c[1] = EC(1);
    const TruncatedSeries s(c, "z");
    const TruncatedSeries r = series_revert(s);
    const TruncatedSeries z = TruncatedSeries::variable(s.size(), "z");
    EXPECT_EQ(series_compose(s, r), z);
    EXPECT_EQ(series_compose(r, s), z);
  }
}

TEST(TruncatedSeries, Evaluate) {
  const auto s = make({1, q(1, 2), q(1, 4)});
  EXPECT_DOUBLE_EQ(s.evaluate(2.0), 1.0 + 1.0 + 1.0);
  EXPECT_EQ(s.to_doubles(), (std::vector<double>{1.0, 0.5, 0.25}));
}
