#include <gtest/gtest.h>

#include "modbound/errors.hpp"
#include "modbound/regulator.hpp"
#include "oracle.hpp"

using namespace modbound;
using oracle::Big;

TEST(Regulator, RationalsHaveUnitSiegelFactor) {
  const auto r = sregulator_bounds(field_preset("Q"), {});
  EXPECT_EQ(r.upper_via_siegel.ln_approx(), 0.0);
  EXPECT_DOUBLE_EQ(r.lower_const, 0.1);
  EXPECT_FALSE(r.upper_via_hR.has_value());
}

TEST(Regulator, GaussianSiegelBound) {
  const auto r = sregulator_bounds(field_preset("gaussian"), {});
  const Big ref = Big(2) * 2 / oracle::pi() * oracle::e() * oracle::ln(Big(4)) / 4 * 2;
  EXPECT_NEAR(r.upper_via_siegel.ln_approx(), static_cast<double>(oracle::ln(ref)), 1e-14);
  EXPECT_GE(r.upper_via_siegel.ln_approx(), static_cast<double>(oracle::ln(ref)) - 1e-16);
  EXPECT_NEAR(std::exp(r.upper_via_siegel.ln_approx()), 2.398999, 1e-6);
}

TEST(Regulator, FinitePlacesMultiplyTheLogNorms) {
  const auto K = field_preset("gaussian");
  std::vector<FinitePlace> places = {{5, 1, 1, 5, false}, {5, 1, 1, 5, false}, {3, 2, 1, 9, false}};
  const auto P = finite_log_product(places);
  const Big ref = oracle::ln(Big(5)) * oracle::ln(Big(5)) * oracle::ln(Big(9));
  EXPECT_NEAR(P.ln_approx(), static_cast<double>(oracle::ln(ref)), 1e-14);
  const auto r = sregulator_bounds(K, places, mpq_class(1, 2));
  ASSERT_TRUE(r.upper_via_hR.has_value());
  EXPECT_NEAR(r.upper_via_hR->ln_approx(), static_cast<double>(oracle::ln(ref / 2)), 1e-14);
  // h R P is smaller than the Siegel bound here, so it is picked.
  EXPECT_EQ(&r.best_upper(), &*r.upper_via_hR);
}

TEST(Regulator, ProductCanBeBelowOne) {
  // log 2 < 1, so a place of norm 2 shrinks the product.
  const auto P = finite_log_product({{2, 1, 1, 2, false}});
  EXPECT_LT(P.ln_approx(), 0.0);
}

TEST(Regulator, TinyDiscriminantIsRejected) {
  NumberField K = field_preset("gaussian");
  K.disc_abs = 1;
  EXPECT_THROW(sregulator_bounds(K, {}), InvalidFieldError);
}
