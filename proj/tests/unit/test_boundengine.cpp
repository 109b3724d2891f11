#include <gtest/gtest.h>

#include <random>

#include "modbound/boundengine.hpp"
#include "modbound/errors.hpp"
#include "oracle.hpp"

using namespace modbound;
using oracle::Big;

namespace {

BoundInput input_for(NumberField K, std::vector<std::uint64_t> primes, long N, unsigned bits = 256,
                     Rounding r = Rounding::Up) {
  BoundInput in;
  in.field = std::move(K);
  in.s_primes = std::move(primes);
  in.level_N = N;
  in.cusp_assertion = true;
  in.precision_bits = bits;
  in.rounding = r;
  return in;
}

Big as_big(const BigFloat& x, mpfr_rnd_t rnd) { return Big(x.to_string(75, rnd)); }

std::vector<Big> big_norms(const std::vector<FinitePlace>& places) {
  std::vector<Big> out;
  for (const auto& v : places) out.emplace_back(v.norm.get_str());
  return out;
}

}  // namespace

TEST(BoundEngine, MixedLevelTable) {
  EXPECT_EQ(level_M(6), 6);
  EXPECT_EQ(level_M(8), 24);
  EXPECT_EQ(level_M(9), 18);
  EXPECT_EQ(level_M(2), 6);
  EXPECT_EQ(level_M(7), 14);
  for (long N = 2; N <= 3000; ++N) EXPECT_EQ(level_M(N), oracle::mixed_level(N)) << N;
  EXPECT_THROW(level_M(1), DomainError);
}

TEST(BoundEngine, PlaceCounts) {
  const auto Q = field_preset("Q");
  const auto empty = compute_s_and_ell(Q, {});
  EXPECT_EQ(empty.s, 1);
  EXPECT_EQ(empty.ell, 1);
  const auto q23 = compute_s_and_ell(Q, {2, 3});
  EXPECT_EQ(q23.s, 3);
  EXPECT_EQ(q23.ell, 3);

  const auto G = field_preset("gaussian");
  const auto exact2 = compute_s_and_ell(G, {2});
  EXPECT_EQ(exact2.s, 2);
  const auto over2 = compute_s_and_ell(G, {2}, SplittingMode::OverApprox);
  EXPECT_EQ(over2.s, 3);
  ASSERT_EQ(over2.places.size(), 2u);
  EXPECT_EQ(over2.places[0].norm, 4);
  EXPECT_TRUE(over2.places[0].over_approximated);
  EXPECT_EQ(over2.ell, 2);
  EXPECT_EQ(compute_s_and_ell(G, {5}).s, 3);
  EXPECT_EQ(compute_s_and_ell(G, {3}).s, 2);

  EXPECT_THROW(compute_s_and_ell(Q, {4}), UsageError);
  EXPECT_THROW(compute_s_and_ell(Q, {3, 3}), UsageError);
}

TEST(BoundEngine, UncertainSplittingModes) {
  const auto K = field_from_poly({3, 0, 1});
  EXPECT_THROW(compute_s_and_ell(K, {2}, SplittingMode::Exact), SplittingError);
  const auto over = compute_s_and_ell(K, {2});
  EXPECT_EQ(over.s, 3);
  ASSERT_EQ(over.flags.size(), 1u);
  EXPECT_EQ(over.flags[0], "splitting_over_approximated:2");
  EXPECT_EQ(splitting_mode_from_string("overapprox"), SplittingMode::OverApprox);
  EXPECT_THROW(splitting_mode_from_string("maybe"), UsageError);
}

TEST(BoundEngine, DeltaForRationals) {
  const auto d6 = delta_from_parts(1, 1, {}, 6);
  const Big x = oracle::pow(Big(6), Big(6));
  const Big ref = boost::multiprecision::sqrt(x) * oracle::pow(oracle::ln(x), Big(2));
  EXPECT_NEAR(std::exp(d6.ln_approx()), 24964.0859, 1e-4);
  EXPECT_LT(oracle::rel_err(as_big(d6.ln(), MPFR_RNDN), oracle::ln(ref)), 1e-40);
  // M = 2 is not a mixed level but the formula is defined: sqrt(4) log 4.
  EXPECT_NEAR(std::exp(delta_from_parts(1, 1, {}, 2).ln_approx()), 2 * std::log(4.0), 1e-12);
}

TEST(BoundEngine, HeadlineBoundMatchesOracle) {
  const auto b = theorem12_bound(input_for(field_preset("Q"), {}, 6));
  EXPECT_EQ(b.M, 6);
  EXPECT_EQ(b.s, 1);
  const Big ref = oracle::ln_final_bound(1, 1, 1, 6, Big(1), {}) / oracle::ln(Big(10));
  EXPECT_LT(oracle::rel_err(as_big(b.log10_final, MPFR_RNDU), ref), 1e-20);
  EXPECT_NEAR(b.log10_final.to_double(), 78.20501969948, 1e-10);
  EXPECT_GE(as_big(b.log10_final, MPFR_RNDD), ref - Big("1e-60"));
}

TEST(BoundEngine, LevelTwoEqualsLevelSix) {
  const auto a = theorem12_bound(input_for(field_preset("Q"), {}, 2));
  const auto b = theorem12_bound(input_for(field_preset("Q"), {}, 6));
  EXPECT_EQ(mpfr_cmp(a.final_bound.ln().get(), b.final_bound.ln().get()), 0);
  EXPECT_EQ(a.provenance_flags, std::vector<std::string>{"level_replaced_by_mixed_level"});
}

TEST(BoundEngine, BoundsForOtherFieldsMatchOracle) {
  struct Case {
    NumberField K;
    std::vector<std::uint64_t> primes;
    long N;
  };
  std::vector<Case> cases = {{field_preset("gaussian"), {2, 5}, 10},
                             {field_preset("eisenstein"), {3}, 12},
                             {field_preset("quadratic", -5), {2, 3, 7}, 9},
                             {field_preset("cyclotomic", 5), {11}, 15},
                             {field_from_poly({-2, 0, 0, 1}), {5}, 8}};
  for (const auto& c : cases) {
    const auto b = theorem12_bound(input_for(c.K, c.primes, c.N));
    const Big ref = oracle::ln_final_bound(b.d, b.s, b.ell, b.M, Big(b.disc_abs.get_str()), big_norms(b.places));
    EXPECT_LT(oracle::rel_err(as_big(b.final_bound.ln(), MPFR_RNDN), ref), 1e-40) << c.K.name;
    EXPECT_GE(as_big(b.final_bound.ln(), MPFR_RNDU), ref) << c.K.name;
  }
}

TEST(BoundEngine, ProvenanceFlags) {
  const auto b = theorem12_bound(input_for(field_from_poly({-2, 0, 0, 1}), {}, 6));
  EXPECT_EQ(b.provenance_flags, (std::vector<std::string>{"disc_surrogate_poly_discriminant", "omega_bound_2d2"}));
  auto in = input_for(field_preset("gaussian"), {2}, 6);
  in.splitting = SplittingMode::OverApprox;
  const auto g = theorem12_bound(in);
  EXPECT_EQ(g.s, 3);
  EXPECT_EQ(g.provenance_flags, std::vector<std::string>{"splitting_over_approximated:2"});
}

TEST(BoundEngine, HypothesesAreEnforced) {
  auto in = input_for(field_preset("Q"), {}, 6);
  in.cusp_assertion = false;
  EXPECT_THROW(theorem12_bound(in), UsageError);
  in.cusp_assertion = true;
  in.level_N = 1;
  EXPECT_THROW(theorem12_bound(in), DomainError);
  in.level_N = 6;
  in.assert_cyclotomic = true;
  EXPECT_THROW(theorem12_bound(in), UsageError);  // zeta_6 is not in Q
}

TEST(BoundEngine, CyclotomicFieldPath) {
  auto in = input_for(field_preset("cyclotomic", 12), {5}, 12);
  in.assert_cyclotomic = true;
  const auto b = theorem12_bound(in);
  ASSERT_TRUE(b.lemma41_bound.has_value());
  EXPECT_LE(mpfr_cmp(b.lemma41_bound->ln().get(), b.final_bound.ln().get()), 0);
  EXPECT_EQ(b.provenance_flags.back(), "cyclotomic_asserted_by_user");
}

TEST(BoundEngine, LemmaBoundCollapsesAtRZero) {
  const RoundingContext ctx{};
  const auto one = LogValue::one(ctx);
  const auto v = lemma41_bound(2, 1, 1, 6, one);
  // r = 0: 40 d s N^8 U R log(d^2 s zeta N^16 U R) with U = 2^35 2^5.
  const Big U = oracle::pow(Big(2), Big(40));
  const Big zeta = oracle::pow(oracle::ln(Big(6)), Big(3)) / 2;
  const Big ref = 80 * oracle::pow(Big(6), Big(8)) * U * oracle::ln(4 * zeta * oracle::pow(Big(6), Big(16)) * U);
  EXPECT_LT(oracle::rel_err(as_big(v.ln(), MPFR_RNDN), oracle::ln(ref)), 1e-40);
  EXPECT_THROW(lemma41_bound(1, 1, 1, 6, one), DomainError);
  EXPECT_THROW(lemma41_bound(2, 1, 1, 5, one), DomainError);
}

TEST(BoundEngine, CyclotomicLift) {
  const auto K = field_preset("gaussian");
  const auto lift = cyclotomic_lift(K, {}, 2, 12);
  EXPECT_EQ(lift.s_tilde_bound, 8);
  EXPECT_EQ(lift.d_tilde_bound, 8);
  EXPECT_EQ(lift.omega_tilde_bound, 2 * 4 * 16);
  EXPECT_THROW(cyclotomic_lift(K, {}, 2, 8), DomainError);
  // Q(zeta_12) over Q: |D| = 144 <= 12^12.
  EXPECT_TRUE(lift_disc_inequality_holds(cyclotomic_disc_abs(12), 1, 1, 12));
  EXPECT_FALSE(lift_disc_inequality_holds(mpz_class(1) + mpz_class("8916100448256"), 1, 1, 12));
}

TEST(BoundEngine, RoundingSandwichAndPrecisionNesting) {
  for (long N : {6L, 10L, 16L, 27L}) {
    BigFloat previous_up(64);
    mpfr_set_inf(previous_up.get(), 1);
    BigFloat previous_gap(64);
    mpfr_set_inf(previous_gap.get(), 1);
    for (unsigned bits : {256u, 512u, 1024u, 2048u}) {
      const auto hi = theorem12_bound(input_for(field_preset("gaussian"), {3, 5}, N, bits, Rounding::Up));
      const auto lo = theorem12_bound(input_for(field_preset("gaussian"), {3, 5}, N, bits, Rounding::Down));
      ASSERT_LE(mpfr_cmp(lo.final_bound.ln().get(), hi.final_bound.ln().get()), 0);
      EXPECT_LE(mpfr_cmp(hi.final_bound.ln().get(), previous_up.get()), 0);
      BigFloat gap(bits);
      mpfr_sub(gap.get(), hi.final_bound.ln().get(), lo.final_bound.ln().get(), MPFR_RNDU);
      EXPECT_LE(mpfr_cmp(gap.get(), previous_gap.get()), 0);
      previous_up = hi.final_bound.ln();
      previous_gap = gap;
    }
  }
}

TEST(BoundEngine, MonotoneInEveryInput) {
  const RoundingContext up{Rounding::Up, 256};
  const RoundingContext down{Rounding::Down, 256};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const long d = static_cast<long>(rng() % 4) + 1;
    const long s = static_cast<long>(rng() % 4) + 1;
    const long ell = std::vector<long>{1, 2, 3, 5, 7}[rng() % 5];
    const long M = std::vector<long>{6, 10, 12, 14, 15}[rng() % 5];
    const mpz_class D = static_cast<long>(rng() % 1000) + 1;
    std::vector<mpz_class> norms;
    for (long k = 0; k < s - 1; ++k) norms.emplace_back(static_cast<long>(rng() % 50) + 3);
    const auto base = final_bound_from_parts(d, s, ell, M, D, norms, up);
    auto more = norms;
    more.emplace_back(3);
    EXPECT_TRUE(lv_certainly_le(base, final_bound_from_parts(d, s + 1, ell, M, D, more, down)));
    EXPECT_TRUE(lv_certainly_le(base, final_bound_from_parts(d, s, ell + 2, M, D, norms, down)));
    EXPECT_TRUE(lv_certainly_le(base, final_bound_from_parts(d, s, ell, M + 6, D, norms, down)));
    EXPECT_TRUE(lv_certainly_le(base, final_bound_from_parts(d, s, ell, M, D + 1, norms, down)));
  }
}
