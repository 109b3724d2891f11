#include "modbound/regulator.hpp"

#include "modbound/errors.hpp"

namespace modbound {

const LogValue& SRegulatorReport::best_upper() const {
  if (upper_via_hR && mpfr_cmp(upper_via_hR->ln().get(), upper_via_siegel.ln().get()) < 0) return *upper_via_hR;
  return upper_via_siegel;
}

LogValue finite_log_product(const std::vector<FinitePlace>& places, RoundingContext ctx) {
  LogValue product = LogValue::one(ctx);
  for (const auto& v : places) product = product * lv_ln(LogValue::from_integer(v.norm, ctx));
  return product;
}

SRegulatorReport sregulator_bounds(const NumberField& field, const std::vector<FinitePlace>& places,
                                   const std::optional<mpq_class>& hR, RoundingContext ctx) {
  const long d = field.degree;
  if (d >= 2 && field.disc_abs < 3) {
    throw InvalidFieldError("a field of degree >= 2 has |D| >= 3; got |D| = " + field.disc_abs.get_str());
  }
  const LogValue product = finite_log_product(places, ctx);
  const RoundingContext opp = ctx.flipped();

  LogValue siegel = LogValue::from_rational(mpq_class(omega_upper(field), 2), ctx) * product;
  if (field.r2 > 0) {
    siegel = siegel * lv_pow(LogValue::from_integer(2, ctx) * lv_inv(LogValue::pi(opp)), field.r2);
  }
  if (d >= 2) {
    const LogValue disc = LogValue::from_integer(field.disc_abs, ctx);
    const LogValue middle =
        LogValue::euler_e(ctx) * lv_ln(disc) * lv_inv(LogValue::from_integer(4 * (d - 1), opp));
    siegel = siegel * lv_pow(middle, d - 1) * lv_pow(disc, mpq_class(1, 2));
  }

  SRegulatorReport report{0.1, std::nullopt, siegel, product};
  if (hR) {
    if (*hR <= 0) throw DomainError("hR must be positive");
    report.upper_via_hR = LogValue::from_rational(*hR, ctx) * product;
  }
  return report;
}

}  // namespace modbound
