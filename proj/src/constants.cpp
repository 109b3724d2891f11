#include "modbound/constants.hpp"

#include <string>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

LogValue lv(long x, RoundingContext ctx) { return LogValue::from_integer(x, ctx); }

// ln(x) as a LogValue, x >= 2.
LogValue ln_of(long x, RoundingContext ctx) { return lv_ln(lv(x, ctx)); }

LogValue two_pow(long k, RoundingContext ctx) { return lv_pow(lv(2, ctx), k); }

// a / b with b evaluated in the opposite direction.
template <class Den>
LogValue quotient(const LogValue& num, Den&& den_in_opposite_direction) {
  return num * lv_inv(den_in_opposite_direction);
}

}  // namespace

LogValue zeta_of_degree(long d, RoundingContext ctx) {
  if (d <= 1) throw DomainError("zeta is defined for d >= 2, got d = " + std::to_string(d));
  if (d == 2) {
    return quotient(lv_pow(ln_of(6, ctx), 3), lv(2, ctx.flipped()));
  }
  const LogValue ratio = quotient(ln_of(d, ctx), lv_ln(ln_of(d, ctx.flipped())));
  return lv(4, ctx) * lv_pow(ratio, 3);
}

MatveevBranches matveev_branches(long n, int kappa, RoundingContext ctx) {
  if (n < 1) throw DomainError("matveev_C needs n >= 1");
  if (kappa != 1 && kappa != 2) throw DomainError("kappa must be 1 or 2");
  const LogValue half_en = quotient(LogValue::euler_e(ctx) * lv(n, ctx), lv(2, ctx.flipped()));
  LogValue explicit_branch = quotient(lv_pow(half_en, kappa), lv(kappa, ctx.flipped())) *
                             lv_pow(lv(30, ctx), n + 3) * lv_pow(lv(n, ctx), mpq_class(7, 2));
  return {std::move(explicit_branch), two_pow(6 * n + 20, ctx)};
}

LogValue matveev_C(long n, int kappa, RoundingContext ctx) {
  auto branches = matveev_branches(n, kappa, ctx);
  return lv_min(branches.explicit_branch, branches.power_branch);
}

LogValue yu_C0(long n, long d, std::uint64_t p, long e, long f, RoundingContext ctx) {
  if (n < 1 || d < 1 || e < 1 || f < 1 || p < 2) throw DomainError("yu_C0: arguments must be positive, p prime");
  const LogValue pv = LogValue::from_integer(mpz_class(static_cast<unsigned long>(p)), ctx);
  const LogValue log_p_opp = lv_ln(LogValue::from_integer(mpz_class(static_cast<unsigned long>(p)), ctx.flipped()));
  const LogValue head = lv_pow(lv(16 * d, ctx) * LogValue::euler_e(ctx), 2 * (n + 1)) *
                        lv_pow(lv(n, ctx), mpq_class(5, 2)) * ln_of(2 * n * d, ctx) * ln_of(2 * d, ctx);
  const LogValue local = lv_pow(lv(e, ctx), n) * lv_pow(pv, f);
  return quotient(head * local, lv_pow(lv(f, ctx.flipped()) * log_p_opp, 2));
}

LogValue yu_C1(long n, long d, std::uint64_t p, long e, long f, RoundingContext ctx) {
  const LogValue log_p = lv_ln(LogValue::from_integer(mpz_class(static_cast<unsigned long>(p)), ctx));
  return quotient(log_p, lv(e, ctx.flipped())) * yu_C0(n, d, p, e, f, ctx);
}

LogValue baker_upsilon(const BakerParams& params, RoundingContext ctx) {
  const long n = params.n;
  const long d = params.d;
  if (n < 2) throw DomainError("Baker's inequality needs n >= 2, got n = " + std::to_string(n));
  if (d < 1) throw DomainError("field degree must be positive");
  if (std::holds_alternative<ArchimedeanPlace>(params.place)) {
    return two_pow(8 * n + 29, ctx) * lv_pow(lv(d, ctx), n + 2) * lv_ln(LogValue::euler_e(ctx) * lv(d, ctx));
  }
  const auto& place = std::get<NonArchimedeanPlace>(params.place);
  const LogValue pv = LogValue::from_integer(mpz_class(static_cast<unsigned long>(place.p)), ctx);
  return two_pow(10 * n + 10, ctx) * lv_pow(LogValue::euler_e(ctx), 2 * n + 2) * lv_pow(lv(d, ctx), 3 * n + 3) *
         lv_pow(pv, d);
}

UpsilonPair upsilon_tilde(long s, long d, long ell, RoundingContext ctx) {
  if (d < 2) throw DomainError("upsilon_tilde needs d >= 2, got d = " + std::to_string(d));
  if (s < 1) throw DomainError("upsilon_tilde needs s >= 1");
  if (ell < 1) throw DomainError("upsilon_tilde needs ell >= 1");
  const LogValue common = two_pow(13 * s + 22, ctx) * lv_pow(lv(ell, ctx), d);
  return {common * lv_pow(lv(d, ctx), 3 * s + 3), common * lv_pow(lv(d, ctx), 2 * s + 3)};
}

}  // namespace modbound
