#include <gtest/gtest.h>

#include "modbound/errors.hpp"
#include "modbound/interval.hpp"
#include "modbound/logform.hpp"
#include "oracle.hpp"

using namespace modbound;

namespace {

bool contains(const Interval& iv, const oracle::Big& x) {
  const double v = static_cast<double>(x);
  return iv.lo().to_double(MPFR_RNDD) <= v && v <= iv.hi().to_double(MPFR_RNDU);
}

}  // namespace

TEST(Interval, ElementaryOperationsEncloseOracle) {
  const auto pi = Interval::pi(256);
  const auto one = Interval::exact(1, 256);
  const auto expr = pi + one - iv_sqrt(iv_sqr(pi) + one);
  const oracle::Big p = oracle::pi();
  const oracle::Big ref = p + 1 - boost::multiprecision::sqrt(p * p + 1);
  EXPECT_TRUE(contains(expr, ref));
  EXPECT_NEAR(expr.lo().to_double(), 0.844684, 1e-6);
  EXPECT_TRUE(expr.certainly_positive());
}

TEST(Interval, LogExpPowAndDivision) {
  const auto x = Interval::exact(mpq_class(7, 3), 256);
  EXPECT_TRUE(contains(iv_log(x), oracle::ln(oracle::Big(7) / 3)));
  EXPECT_TRUE(contains(iv_exp(x), boost::multiprecision::exp(oracle::Big(7) / 3)));
  EXPECT_TRUE(contains(iv_pow(x, Interval::exact(mpq_class(5, 2), 256)),
                       oracle::pow(oracle::Big(7) / 3, oracle::Big(5) / 2)));
  EXPECT_TRUE(contains(x / Interval::exact(3, 256), oracle::Big(7) / 9));
  EXPECT_THROW(x / (Interval::exact(1, 256) - Interval::exact(1, 256)), DomainError);
  EXPECT_TRUE(contains(Interval::ln_of_integer(mpz_class("123456789012345678901234567890"), 256),
                       oracle::ln(oracle::Big("123456789012345678901234567890"))));
}

TEST(Interval, WidthShrinksWithPrecision) {
  double previous = 1.0;
  for (mpfr_prec_t bits : {64, 128, 256, 512}) {
    const auto v = iv_log(Interval::pi(bits)) * Interval::exact(mpq_class(1, 3), bits);
    BigFloat w(bits);
    mpfr_sub(w.get(), v.hi().get(), v.lo().get(), MPFR_RNDU);
    EXPECT_LE(w.to_double(), previous);
    previous = w.to_double();
  }
}

TEST(LogForm, PrimeFactoringCancelsExactly) {
  const LogForm a = LogForm::ln(12);
  const LogForm b = 2 * LogForm::ln(2) + LogForm::ln(3);
  EXPECT_TRUE((a - b).is_zero());
  const auto c = compare_le(a, b);
  EXPECT_EQ(c.verdict, Verdict::Exact);
  EXPECT_TRUE(c.ok());
}

TEST(LogForm, NestedLogsCancelWhenStructurallyEqual) {
  const LogForm x = LogForm::ln_of(LogForm::ln(96) + LogForm::ln(5));
  const LogForm y = LogForm::ln_of(LogForm::ln(480));
  EXPECT_EQ(compare_le(x, y).verdict, Verdict::Exact);
}

TEST(LogForm, StrictInequalitiesAreDecidedByIntervals) {
  // 48 log 2 log(96 log 2) <= 140, written as a log-ratio.
  const LogForm ln2 = LogForm::ln(2);
  const LogForm lhs = LogForm::ln(48) + LogForm::ln_of(ln2) + LogForm::ln_of(LogForm::ln(96) + LogForm::ln_of(ln2));
  const LogForm rhs = LogForm::ln(140);
  const auto c = compare_le(lhs, rhs);
  EXPECT_EQ(c.verdict, Verdict::Holds);
  const double ref = static_cast<double>(oracle::ln(oracle::Big(140)) -
                                         oracle::ln(48 * oracle::ln(oracle::Big(2)) *
                                                    oracle::ln(96 * oracle::ln(oracle::Big(2)))));
  EXPECT_NEAR(c.margin, ref, 1e-12);
  EXPECT_EQ(compare_le(rhs, lhs).verdict, Verdict::Violated);
}

TEST(LogForm, PiAndConstants) {
  const LogForm f = LogForm::ln_pi() + LogForm::constant(mpq_class(1, 2));
  const auto iv = f.evaluate(256);
  EXPECT_TRUE(contains(iv, oracle::ln(oracle::pi()) + oracle::Big(1) / 2));
  EXPECT_EQ(compare_le(f, f).verdict, Verdict::Exact);
}
