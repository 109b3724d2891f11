#include "modbound/boundengine.hpp"

#include <algorithm>
#include <set>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

LogValue lv(long x, RoundingContext ctx) { return LogValue::from_integer(x, ctx); }
LogValue lv(const mpz_class& x, RoundingContext ctx) { return LogValue::from_integer(x, ctx); }

long phi_long(long n) { return static_cast<long>(euler_totient(static_cast<std::uint64_t>(n))); }

mpz_class mpz_from_u64(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

std::vector<mpz_class> norms_of(const std::vector<FinitePlace>& places) {
  std::vector<mpz_class> out;
  out.reserve(places.size());
  for (const auto& v : places) out.push_back(v.norm);
  return out;
}

}  // namespace

long level_M(long N) {
  if (N < 2) throw DomainError("level_M needs N >= 2, got " + std::to_string(N));
  const auto primes = prime_divisors(static_cast<std::uint64_t>(N));
  if (primes.size() >= 2) return N;
  return primes.front() == 2 ? 3 * N : 2 * N;
}

const char* to_string(SplittingMode mode) {
  switch (mode) {
    case SplittingMode::Auto:
      return "auto";
    case SplittingMode::Exact:
      return "exact";
    case SplittingMode::OverApprox:
      return "overapprox";
  }
  return "auto";
}

SplittingMode splitting_mode_from_string(const std::string& text) {
  if (text == "auto") return SplittingMode::Auto;
  if (text == "exact") return SplittingMode::Exact;
  if (text == "overapprox" || text == "over-approx") return SplittingMode::OverApprox;
  throw UsageError("unknown splitting mode '" + text + "' (expected auto, exact or overapprox)");
}

PlaceCount compute_s_and_ell(const NumberField& field, const std::vector<std::uint64_t>& s_primes,
                             SplittingMode mode) {
  PlaceCount out;
  std::set<std::uint64_t> seen;
  const int d = field.degree;
  for (std::uint64_t p : s_primes) {
    if (!is_prime(p)) throw UsageError("S contains non-prime " + std::to_string(p));
    if (!seen.insert(p).second) throw UsageError("S lists the prime " + std::to_string(p) + " twice");
    SplitResult split = split_prime(field, p);
    const bool certain =
        split.status == SplitStatus::Dedekind || split.status == SplitStatus::Override ||
        (split.status == SplitStatus::Preset && mode != SplittingMode::OverApprox);
    if (!certain && mode == SplittingMode::Exact) {
      throw SplittingError("splitting of " + std::to_string(p) + " is not certified; supply an override");
    }
    if (certain) {
      if (split.status == SplitStatus::Override) out.flags.push_back("splitting_override:" + std::to_string(p));
      for (auto& v : split.places) out.places.push_back(std::move(v));
      continue;
    }
    mpz_class norm;
    mpz_pow_ui(norm.get_mpz_t(), mpz_from_u64(p).get_mpz_t(), static_cast<unsigned long>(d));
    for (int i = 0; i < d; ++i) out.places.push_back({p, d, 1, norm, true});
    out.flags.push_back("splitting_over_approximated:" + std::to_string(p));
  }
  out.s = field.infinite_places() + static_cast<long>(out.places.size());
  out.ell = seen.empty() ? 1 : static_cast<long>(*seen.rbegin());
  return out;
}

LogValue delta_from_parts(long d, const mpz_class& disc_abs, const std::vector<mpz_class>& place_norms, long M,
                          RoundingContext ctx) {
  if (M < 2) throw DomainError("Delta needs M >= 2");
  if (d < 1 || disc_abs < 1) throw DomainError("Delta needs d >= 1 and |D| >= 1");
  const long phi = phi_long(M);
  const LogValue X = lv_pow(lv(M, ctx), d * M) * lv_pow(lv(disc_abs, ctx), phi);
  LogValue product = LogValue::one(ctx);
  for (const auto& q : place_norms) product = product * lv_ln(lv(q, ctx));
  return lv_pow(X, mpq_class(1, 2)) * lv_pow(lv_ln(X), d * phi) * lv_pow(product, phi);
}

LogValue delta_of(const NumberField& field, const std::vector<FinitePlace>& places, long M, RoundingContext ctx) {
  return delta_from_parts(field.degree, field.disc_abs, norms_of(places), M, ctx);
}

LogValue final_bound_from_parts(long d, long s, long ell, long M, const mpz_class& disc_abs,
                                const std::vector<mpz_class>& place_norms, RoundingContext ctx) {
  if (s < 1 || ell < 1) throw DomainError("final bound needs s >= 1 and ell >= 1");
  const mpz_class head = mpz_class(16384) * d * s * M * M;
  return lv_pow(lv(head, ctx), 2 * s * M) * lv_pow(lv_ln(lv(d * M, ctx)), 3 * s * M) * lv_pow(lv(ell, ctx), d * M) *
         delta_from_parts(d, disc_abs, place_norms, M, ctx);
}

LogValue lemma41_bound(long d, long s, long ell, long N, const LogValue& rs_upper) {
  if (d < 2) throw DomainError("the cyclotomic-field bound needs d >= 2");
  if (N < 6) throw DomainError("the cyclotomic-field bound needs N >= 6");
  if (s < 1) throw DomainError("s must be positive");
  const RoundingContext ctx = rs_upper.context();
  const long r = s - 1;
  const LogValue zeta = zeta_of_degree(d, ctx);
  const LogValue ut = upsilon_tilde(s, d, ell, ctx).tilde;
  const LogValue rr = r == 0 ? LogValue::one(ctx) : lv_pow(lv(r, ctx), r);  // r^r
  const LogValue inner = lv(d * d * s, ctx) * lv_pow(rr, 4) * lv_pow(zeta, s) * lv_pow(lv(N, ctx), 16) * ut * rs_upper;
  return lv(40 * d * s, ctx) * lv_pow(rr, 2) * lv_pow(zeta, r) * lv_pow(lv(N, ctx), 8) * ut * rs_upper * lv_ln(inner);
}

CyclotomicLift cyclotomic_lift(const NumberField& field, const std::vector<FinitePlace>& places, long s, long N,
                               RoundingContext ctx) {
  if (N < 6 || prime_divisors(static_cast<std::uint64_t>(N)).size() < 2) {
    throw DomainError("the cyclotomic lift needs N >= 6 with two distinct prime factors, got " + std::to_string(N));
  }
  const long d = field.degree;
  const long phi = phi_long(N);
  CyclotomicLift lift{
      s * phi,
      d * phi,
      lv_pow(lv(N, ctx), d * N) * lv_pow(lv(field.disc_abs, ctx), phi),
      lv_pow(lv(4, ctx), s * phi) * lv_pow(finite_log_product(places, ctx), phi),
      2 * d * d * phi * phi,
  };
  return lift;
}

bool lift_disc_inequality_holds(const mpz_class& disc_tilde, long d, const mpz_class& disc_abs, long N) {
  mpz_class a;
  mpz_class b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(d * N));
  mpz_pow_ui(b.get_mpz_t(), disc_abs.get_mpz_t(), static_cast<unsigned long>(phi_long(N)));
  return disc_tilde <= a * b;
}

BoundBreakdown theorem12_bound(const BoundInput& input) {
  if (!input.cusp_assertion) {
    throw UsageError("the bound requires the hypothesis \"If v_inf(Gamma) >= 3\" (at least three cusps); "
                     "pass the cusp assertion to confirm it");
  }
  if (input.level_N < 2) throw DomainError("level must be >= 2");
  const RoundingContext ctx{input.rounding, input.precision_bits};
  const NumberField& K = input.field;

  const long M = level_M(input.level_N);
  const long phi = phi_long(M);
  const long d = K.degree;
  PlaceCount count = compute_s_and_ell(K, input.s_primes, input.splitting);
  const long s = count.s;

  std::vector<std::string> flags;
  if (!K.disc_is_exact) flags.push_back("disc_surrogate_poly_discriminant");
  if (!K.omega_is_exact) flags.push_back("omega_bound_2d2");
  for (auto& f : count.flags) flags.push_back(std::move(f));
  if (M != input.level_N) flags.push_back("level_replaced_by_mixed_level");

  SRegulatorReport regulator = sregulator_bounds(K, count.places, input.hR, ctx);
  std::optional<LogValue> lemma41;
  if (input.assert_cyclotomic) {
    if (d < 2 || d % phi != 0) {
      throw UsageError("zeta_" + std::to_string(M) + " cannot lie in a field of degree " + std::to_string(d));
    }
    lemma41 = lemma41_bound(d, s, count.ell, M, regulator.best_upper());
    flags.push_back("cyclotomic_asserted_by_user");
  }

  const auto norms = norms_of(count.places);
  LogValue final_bound = final_bound_from_parts(d, s, count.ell, M, K.disc_abs, norms, ctx);
  BigFloat log10_final = lv_log10(final_bound);

  return BoundBreakdown{
      .N = input.level_N,
      .M = M,
      .phi_M = phi,
      .d = d,
      .s = s,
      .ell = count.ell,
      .disc_abs = K.disc_abs,
      .omega_bound = omega_upper(K),
      .places = count.places,
      .place_log_product = finite_log_product(count.places, ctx),
      .delta_M = delta_from_parts(d, K.disc_abs, norms, M, ctx),
      .branch_small_j = lv(16 * s, ctx),
      .branch_small_q = lv(6 * s * M, ctx),
      .zeta_lifted = zeta_of_degree(d * phi, ctx),
      .upsilon_lifted = upsilon_tilde(s * phi, d * phi, count.ell, ctx),
      .regulator = std::move(regulator),
      .lift = cyclotomic_lift(K, count.places, s, M, ctx),
      .lemma41_bound = std::move(lemma41),
      .final_bound = std::move(final_bound),
      .log10_final = std::move(log10_final),
      .provenance_flags = std::move(flags),
      .context = ctx,
  };
}

}  // namespace modbound
