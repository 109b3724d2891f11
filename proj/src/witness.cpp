#include "modbound/witness.hpp"

#include <algorithm>
#include <numeric>

#include "modbound/errors.hpp"
#include "modbound/interval.hpp"

namespace modbound {

namespace {

std::vector<mpz_class> norms_of(const std::vector<FinitePlace>& places) {
  std::vector<mpz_class> out;
  for (const auto& v : places) out.push_back(v.norm);
  return out;
}

std::string fraction(const mpq_class& q) { return q.get_str(); }

// j for lambda = a/b in lowest terms, b > 0: 256 (a^2 - ab + b^2)^3 / (a^2 (a - b)^2 b^2).
mpq_class j_from_parts(const mpz_class& a, const mpz_class& b) {
  const mpz_class t = a * a - a * b + b * b;
  const mpz_class amb = a - b;
  mpq_class j(256 * t * t * t, a * a * amb * amb * b * b);
  j.canonicalize();
  return j;
}

}  // namespace

mpq_class j_of_lambda(const mpq_class& lambda) {
  if (lambda == 0 || lambda == 1) throw DomainError("j is undefined at lambda = 0 and lambda = 1");
  return j_from_parts(lambda.get_num(), lambda.get_den());
}

std::array<mpq_class, 6> lambda_orbit(const mpq_class& lambda) {
  if (lambda == 0 || lambda == 1) throw DomainError("the lambda orbit needs lambda not in {0, 1}");
  const mpq_class one(1);
  return {lambda,
          one - lambda,
          one / lambda,
          one / (one - lambda),
          (lambda - one) / lambda,
          lambda / (lambda - one)};
}

bool supported_on(const mpz_class& n, const std::vector<std::uint64_t>& s_primes) {
  mpz_class rest = abs(n);
  if (rest == 0) return false;
  for (std::uint64_t p : s_primes) {
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
  }
  return rest == 1;
}

LambdaPoint make_lambda_point(const mpq_class& lambda, const std::vector<std::uint64_t>& s_primes, unsigned bits) {
  LambdaPoint pt;
  pt.lambda = lambda;
  pt.j_value = j_of_lambda(lambda);
  pt.is_S_integral = supported_on(pt.j_value.get_den(), s_primes);
  const mpz_class top = std::max(mpz_class(abs(pt.j_value.get_num())), mpz_class(pt.j_value.get_den()));
  const Interval h = Interval::ln_of_integer(top, bits);
  pt.j_height_up = h.hi();
  pt.j_height_down = h.lo();
  return pt;
}

std::vector<LambdaPoint> enumerate_witnesses(const std::vector<std::uint64_t>& s_primes, long height_cap,
                                             unsigned bits) {
  if (height_cap < 1) throw DomainError("height_cap must be at least 1");
  std::vector<LambdaPoint> out;
  mpz_class a;
  mpz_class b;
  for (long den = 1; den <= height_cap; ++den) {
    b = den;
    for (long num = -height_cap; num <= height_cap; ++num) {
      if (num == 0 || num == den || std::gcd(num, den) != 1) continue;
      a = num;
      const mpz_class t = a * a - a * b + b * b;
      const mpz_class amb = a - b;
      const mpz_class j_num = 256 * t * t * t;
      mpz_class j_den = a * a * amb * amb * b * b;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), j_num.get_mpz_t(), j_den.get_mpz_t());
      mpz_divexact(j_den.get_mpz_t(), j_den.get_mpz_t(), g.get_mpz_t());
      if (!supported_on(j_den, s_primes)) continue;
      out.push_back(make_lambda_point(mpq_class(a, b), s_primes, bits));
    }
  }
  return out;
}

WitnessReport check_witnesses_against_bound(const std::vector<LambdaPoint>& points, const BoundBreakdown& breakdown) {
  if (breakdown.d != 1 || breakdown.N != 2) {
    throw UsageError("the witness harness needs a bound for K = Q at level 2");
  }
  const RoundingContext down{Rounding::Down, breakdown.context.bits};
  const LogValue bound = breakdown.context.dir == Rounding::Down
                             ? breakdown.final_bound
                             : final_bound_from_parts(breakdown.d, breakdown.s, breakdown.ell, breakdown.M,
                                                      breakdown.disc_abs, norms_of(breakdown.places), down);
  WitnessReport report;
  report.bound_log10_down = lv_log10(bound);
  mpfr_set_zero(report.max_height_up.get(), 1);
  BigFloat log_h(breakdown.context.bits);
  for (const auto& pt : points) {
    if (!pt.is_S_integral) continue;
    ++report.points_checked;
    if (!report.max_lambda || mpfr_cmp(pt.j_height_up.get(), report.max_height_up.get()) > 0) {
      report.max_height_up = pt.j_height_up;
      report.max_lambda = pt.lambda;
      report.max_j = pt.j_value;
    }
    // h <= B  <=>  log h <= log B; log 0 = -inf is handled by MPFR.
    mpfr_log(log_h.get(), pt.j_height_up.get(), MPFR_RNDU);
    if (mpfr_cmp(log_h.get(), bound.ln().get()) > 0) {
      report.violations.push_back("lambda=" + fraction(pt.lambda) + " j=" + fraction(pt.j_value) +
                                  " h(j)=" + pt.j_height_up.to_string(17, MPFR_RNDU) + " exceeds the bound");
    }
  }
  return report;
}

BoundBreakdown lambda_line_bound(const std::vector<std::uint64_t>& s_primes, unsigned bits) {
  BoundInput input;
  input.field = field_preset("Q");
  input.s_primes = s_primes;
  input.level_N = 2;
  input.cusp_assertion = true;
  input.precision_bits = bits;
  input.rounding = Rounding::Down;
  return theorem12_bound(input);
}

}  // namespace modbound
