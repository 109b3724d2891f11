#include <gtest/gtest.h>

#include <random>

#include "modbound/errors.hpp"
#include "modbound/logscale.hpp"
#include "oracle.hpp"

using namespace modbound;

namespace {

RoundingContext up(unsigned bits = 256) { return {Rounding::Up, bits}; }
RoundingContext down(unsigned bits = 256) { return {Rounding::Down, bits}; }

double ln_gap(const LogValue& hi, const LogValue& lo) {
  BigFloat gap(hi.precision());
  mpfr_sub(gap.get(), hi.ln().get(), lo.ln().get(), MPFR_RNDU);
  return gap.to_double(MPFR_RNDU);
}

// A random expression tree over positive integers, rebuilt deterministically per direction.
struct Expr {
  std::uint64_t seed;

  LogValue build(RoundingContext ctx) const {
    std::mt19937_64 rng(seed);
    return node(rng, ctx, 0);
  }

 private:
  LogValue leaf(std::mt19937_64& rng, RoundingContext ctx) const {
    const long a = static_cast<long>(rng() % 997) + 2;
    if (rng() % 3 == 0) return LogValue::from_rational(mpq_class(a, static_cast<long>(rng() % 89) + 1), ctx);
    return LogValue::from_integer(a, ctx);
  }

  LogValue node(std::mt19937_64& rng, RoundingContext ctx, int depth) const {
    if (depth >= 4) return leaf(rng, ctx);
    switch (rng() % 6) {
      case 0:
        return node(rng, ctx, depth + 1) * node(rng, ctx, depth + 1);
      case 1:
        return node(rng, ctx, depth + 1) + node(rng, ctx, depth + 1);
      case 2:
        return lv_pow(node(rng, ctx, depth + 1), mpq_class(static_cast<long>(rng() % 7) + 1, 2));
      case 3: {
        // ln(3 + x) stays above 1.
        const LogValue x = node(rng, ctx, depth + 1);
        return lv_ln(x + LogValue::from_integer(3, ctx));
      }
      case 4: {
        // x / y with y computed in the opposite direction.
        const std::uint64_t sub = rng();
        const LogValue x = node(rng, ctx, depth + 1);
        std::mt19937_64 side(sub);
        const LogValue y = node(side, ctx.flipped(), depth + 1);
        return x * lv_inv(y);
      }
      default:
        return leaf(rng, ctx);
    }
  }
};

}  // namespace

TEST(LogScale, IntegerSandwichesOracle) {
  for (long x : {2L, 3L, 1728L, 1000003L}) {
    const auto u = LogValue::from_integer(x, up());
    const auto d = LogValue::from_integer(x, down());
    const double ref = static_cast<double>(oracle::ln(oracle::Big(x)));
    EXPECT_LE(d.ln_approx(), ref);
    EXPECT_GE(u.ln_approx(), ref);
    EXPECT_TRUE(lv_certainly_le(u, LogValue::from_integer(x + 1, down())));
    EXPECT_FALSE(lv_certainly_le(LogValue::from_integer(x + 1, up()), d));
  }
}

TEST(LogScale, DecimalLiteralsAreExact) {
  EXPECT_EQ(parse_real_literal("0.92"), mpq_class(23, 25));
  EXPECT_EQ(parse_real_literal("-1.5e3"), mpq_class(-1500));
  EXPECT_EQ(parse_real_literal("3/6"), mpq_class(1, 2));
  mpq_class e_approx("2718281828/1000000000");
  e_approx.canonicalize();
  EXPECT_EQ(parse_real_literal("2.718281828"), e_approx);
  EXPECT_THROW(parse_real_literal("1.2.3"), DomainError);
  EXPECT_THROW(parse_real_literal(""), DomainError);
}

TEST(LogScale, ValuesBelowOneAreRepresentableButLnRejectsThem) {
  const auto half = LogValue::from_rational(mpq_class(1, 2), up());
  EXPECT_LT(half.ln_approx(), 0.0);
  EXPECT_THROW(lv_ln(half), DomainError);
  EXPECT_THROW(LogValue::from_integer(0, up()), DomainError);
}

TEST(LogScale, MixedDirectionsAreRejected) {
  const auto a = LogValue::from_integer(5, up());
  const auto b = LogValue::from_integer(7, down());
  EXPECT_THROW(a * b, UsageError);
  EXPECT_THROW(a + b, UsageError);
  EXPECT_THROW(LogValue::from_integer(5, up()) * LogValue::from_integer(5, up(512)), UsageError);
}

TEST(LogScale, AdditionMatchesOracle) {
  const auto s = LogValue::from_integer(1000, up()) + LogValue::from_rational(mpq_class(1, 3), up());
  const double ref = static_cast<double>(oracle::ln(oracle::Big(1000) + oracle::Big(1) / 3));
  EXPECT_NEAR(s.ln_approx(), ref, 1e-15);
  // Far apart magnitudes.
  const auto huge = lv_pow(LogValue::from_integer(10, up()), 100000L);
  const auto sum = huge + LogValue::one(up());
  EXPECT_GE(sum.ln_approx(), huge.ln_approx());
}

TEST(LogScale, Log10OfLargePowers) {
  const auto v = lv_pow(LogValue::from_integer(10, up()), 1000000L);
  EXPECT_NEAR(lv_log10_approx(v), 1e6, 1e-6);
}

TEST(LogScale, SandwichOnRandomExpressionTrees) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Expr e{seed};
    double previous_gap = 1e300;
    for (unsigned bits : {256u, 512u, 1024u}) {
      const LogValue hi = e.build(up(bits));
      const LogValue lo = e.build(down(bits));
      ASSERT_LE(mpfr_cmp(lo.ln().get(), hi.ln().get()), 0) << "seed " << seed << " bits " << bits;
      const double gap = ln_gap(hi, lo);
      EXPECT_LE(gap, previous_gap) << "seed " << seed << " bits " << bits;
      previous_gap = gap;
    }
  }
}

TEST(LogScale, OperationsAreMonotone) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const long a = static_cast<long>(rng() % 100000) + 3;
    const long b = static_cast<long>(rng() % 100000) + 3;
    const auto A = LogValue::from_integer(a, up());
    const auto A1 = LogValue::from_integer(a + 1, up());
    const auto B = LogValue::from_integer(b, up());
    EXPECT_LE(mpfr_cmp((A * B).ln().get(), (A1 * B).ln().get()), 0);
    EXPECT_LE(mpfr_cmp((A + B).ln().get(), (A1 + B).ln().get()), 0);
    EXPECT_LE(mpfr_cmp(lv_ln(A).ln().get(), lv_ln(A1).ln().get()), 0);
    EXPECT_LE(mpfr_cmp(lv_pow(A, 3L).ln().get(), lv_pow(A1, 3L).ln().get()), 0);
    EXPECT_LE(mpfr_cmp(lv_max(A, B).ln().get(), lv_max(A1, B).ln().get()), 0);
    EXPECT_LE(mpfr_cmp(lv_min(A, B).ln().get(), lv_min(A1, B).ln().get()), 0);
  }
}

TEST(LogScale, PowersScaleTheLogWithinOneUlp) {
  for (long x : {2L, 7L, 30L, 99991L}) {
    for (long k : {2L, 5L, 64L, 4097L}) {
      for (Rounding r : {Rounding::Up, Rounding::Down}) {
        const RoundingContext ctx{r, 256};
        const auto base = LogValue::from_integer(x, ctx);
        const auto p = lv_pow(base, k);
        BigFloat scaled(256);
        mpfr_mul_si(scaled.get(), base.ln().get(), k, MPFR_RNDN);
        BigFloat diff(256);
        mpfr_sub(diff.get(), p.ln().get(), scaled.get(), MPFR_RNDN);
        mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
        // One ulp of the result, measured at 256 bits.
        BigFloat ulp(256);
        mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(p.ln().get()) - 255, MPFR_RNDN);
        EXPECT_LE(mpfr_cmp(diff.get(), ulp.get()), 0) << x << "^" << k;
      }
    }
  }
}

TEST(LogScale, ReciprocalFlipsDirection) {
  const auto x = LogValue::from_integer(3, down());
  const auto inv = lv_inv(x);
  EXPECT_EQ(inv.rounding(), Rounding::Up);
  EXPECT_GE(inv.ln_approx(), -std::log(3.0) - 1e-15);
}

TEST(LogScale, ConstantsMatchOracle) {
  EXPECT_NEAR(LogValue::pi(up()).ln_approx(), static_cast<double>(oracle::ln(oracle::pi())), 1e-15);
  EXPECT_EQ(LogValue::euler_e(up()).ln_approx(), 1.0);
  EXPECT_EQ(LogValue::one(down()).ln_approx(), 0.0);
}
