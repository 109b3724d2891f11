#include "modbound/lemmaverify.hpp"

#include <cmath>

#include "modbound/boundengine.hpp"
#include "modbound/errors.hpp"
#include "modbound/interval.hpp"
#include "modbound/numfield.hpp"
#include "verify_recorder.hpp"

namespace modbound {

namespace {

std::vector<std::uint32_t> totient_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= limit; k += p) phi[k] -= phi[k] / static_cast<std::uint32_t>(p);
  }
  return phi;
}

}  // namespace

VerificationResult verify_totient_sqrt(std::uint64_t limit) {
  if (limit < 7) throw DomainError("verify_totient_sqrt needs limit >= 7");
  if (limit > 4000000000ULL) throw DomainError("verify_totient_sqrt limit too large");
  detail::Recorder rec("totient", "phi(n)^2 >= n for 1 <= n <= " + std::to_string(limit) + ", n not in {2, 6}");
  const auto phi = totient_sieve(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const std::uint64_t sq = static_cast<std::uint64_t>(phi[n]) * phi[n];
    const double margin = static_cast<double>(sq) - static_cast<double>(n);
    if (n == 2 || n == 6) {
      const bool violates = sq < n;
      rec.record("excluded point violates", "absolute", violates, false, -margin, "n=" + std::to_string(n),
                 "excluded point does not violate");
      rec.note("n=" + std::to_string(n) + ": phi^2=" + std::to_string(sq) + " < " + std::to_string(n));
      continue;
    }
    rec.record("phi(n)^2 >= n", "absolute", sq >= n, false, margin, "n=" + std::to_string(n));
  }
  return rec.finish();
}

VerificationResult verify_cyclotomic_disc(long n_max, long gap_limit) {
  if (n_max < 3) throw DomainError("verify_cyclotomic_disc needs N_max >= 3");
  detail::Recorder rec("cyclotomic", "|D(Q(zeta_N))| <= N^N for N in [3, " + std::to_string(n_max) +
                                         "]; N - phi(N) >= 4 for non-prime-power N in [6, " +
                                         std::to_string(gap_limit) + "]");
  for (long N = 3; N <= n_max; ++N) {
    const mpz_class disc = cyclotomic_disc_abs(static_cast<std::uint64_t>(N));
    const bool ok = lift_disc_inequality_holds(disc, 1, 1, N);
    // log(N^N / |D|), the log-ratio slack.
    const double margin = static_cast<double>(N) * std::log(static_cast<double>(N)) -
                          Interval::ln_of_integer(disc, 64).hi().to_double(MPFR_RNDU);
    rec.record("|D(Q(zeta_N))| <= N^N", "log-ratio", ok, false, margin, "N=" + std::to_string(N));
  }
  for (long N = 6; N <= gap_limit; ++N) {
    if (prime_divisors(static_cast<std::uint64_t>(N)).size() < 2) continue;
    const long gap = N - static_cast<long>(euler_totient(static_cast<std::uint64_t>(N)));
    rec.record("N - phi(N) >= 4", "absolute", gap >= 4, false, static_cast<double>(gap - 4),
               "N=" + std::to_string(N));
  }
  return rec.finish();
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"totient",  "petho",      "log1p",      "constants",
                                               "upsilon",  "cyclotomic", "final-chain"};
  return ids;
}

std::vector<VerificationResult> run_suite(const std::string& id, const SuiteOptions& options) {
  if (id == "all") {
    std::vector<VerificationResult> out;
    for (const auto& s : suite_ids()) {
      auto part = run_suite(s, options);
      for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
  }
  const std::uint64_t samples = options.samples.value_or(10000);
  if (id == "totient") return {verify_totient_sqrt(options.limit.value_or(1000000))};
  if (id == "petho") return {verify_petho(samples, options.seed)};
  if (id == "log1p") return {verify_log1p_bound(samples, options.seed)};
  if (id == "constants") return {verify_constant_chain()};
  if (id == "upsilon") return {verify_upsilon_dominance()};
  if (id == "cyclotomic") {
    return {verify_cyclotomic_disc(static_cast<long>(options.limit.value_or(200)), 10000)};
  }
  if (id == "final-chain") return {verify_final_chain()};
  throw UsageError("unknown verification suite '" + id + "'");
}

}  // namespace modbound
