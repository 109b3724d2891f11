#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modbound {

struct CheckSummary {
  std::string label;
  std::string margin_kind;  // "absolute" or "log-ratio"
  std::uint64_t cases = 0;
  std::uint64_t exact = 0;  // cases decided as exact identities
  std::uint64_t failures = 0;
  double worst_margin = 0.0;
};

struct VerificationResult {
  std::string lemma_id;
  std::string domain_checked;
  std::uint64_t cases_checked = 0;
  std::vector<std::string> counterexamples;  // sorted
  double worst_margin = 0.0;
  std::vector<CheckSummary> checks;
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
};

// phi(n)^2 >= n for 1 <= n <= limit, n not in {2, 6}; both excluded points must violate.
VerificationResult verify_totient_sqrt(std::uint64_t limit = 1000000);

struct PethoOutcome {
  double root_lo = 0.0;  // the largest root of x - a (log x)^h - b lies in [root_lo, root_hi]
  double root_hi = 0.0;
  bool root_bracketed = false;  // false: no root beyond the monotone point
  double bound_down = 0.0;      // closed form 2^h (b^(1/h) + a^(1/h) log(h^h a))^h, rounded down
  bool certified = false;       // F > 0 and F increasing on [bound, inf)
};
PethoOutcome petho_case(double a, double b, double h);
VerificationResult verify_petho(std::uint64_t samples = 10000, std::uint64_t seed = 1);

struct Log1pOutcome {
  double lhs_up = 0.0;    // |log(1 + z)|
  double rhs_down = 0.0;  // 2 log 2 |z|
  bool exact_identity = false;
  bool holds = false;
  double ulp_gap = 0.0;  // (lhs_up - rhs_down) in units of 2^-256 * rhs
};
Log1pOutcome log1p_case(double x, double y);
VerificationResult verify_log1p_bound(std::uint64_t samples = 10000, std::uint64_t seed = 1);

VerificationResult verify_constant_chain();

// Upsilon_full >= both Baker branches for d in [2, d_max], s = n in [2, s_max], p <= l <= l_max.
VerificationResult verify_upsilon_dominance(long d_max = 10, long s_max = 8, long ell_max = 100);

// |D(Q(zeta_N))| <= N^N for N in [3, n_max], and N - phi(N) >= 4 for
// non-prime-power N in [6, gap_limit].
VerificationResult verify_cyclotomic_disc(long n_max = 200, long gap_limit = 10000);

struct FinalChainGrid {
  std::vector<long> d = {2, 3, 4, 5, 6, 7, 8};
  std::vector<long> s = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<long> ell = {1, 2, 3, 5, 7};
  std::vector<long> N = {6, 10, 12, 15};
  std::vector<long> disc = {3, 10, 100, 1000, 10000, 100000, 1000000};
};
VerificationResult verify_final_chain(const FinalChainGrid& grid = {});

struct SuiteOptions {
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_ids();
// id is one of suite_ids() or "all".
std::vector<VerificationResult> run_suite(const std::string& id, const SuiteOptions& options = {});

}  // namespace modbound
