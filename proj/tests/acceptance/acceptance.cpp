#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modbound/boundengine.hpp"
#include "modbound/lemmaverify.hpp"
#include "modbound/numfield.hpp"
#include "modbound/witness.hpp"
#include "oracle.hpp"

using namespace modbound;
using oracle::Big;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Big as_big(const BigFloat& x, mpfr_rnd_t rnd) { return Big(x.to_string(75, rnd)); }

std::vector<Big> big_norms(const std::vector<FinitePlace>& places) {
  std::vector<Big> out;
  for (const auto& v : places) out.emplace_back(v.norm.get_str());
  return out;
}

const CheckSummary* find_check(const VerificationResult& r, const std::string& label) {
  for (const auto& c : r.checks) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

BoundInput bound_input(NumberField K, std::vector<std::uint64_t> primes, long N, unsigned bits, Rounding r) {
  BoundInput in;
  in.field = std::move(K);
  in.s_primes = std::move(primes);
  in.level_N = N;
  in.cusp_assertion = true;
  in.precision_bits = bits;
  in.rounding = r;
  return in;
}

// Inputs for the headline and rounding criteria: Q at N = 6 plus 20 seeded grid points.
std::vector<BoundInput> headline_inputs() {
  std::vector<BoundInput> out;
  out.push_back(bound_input(field_preset("Q"), {}, 6, 256, Rounding::Up));
  const std::vector<std::function<NumberField()>> presets = {
      [] { return field_preset("Q"); },
      [] { return field_preset("gaussian"); },
      [] { return field_preset("eisenstein"); },
      [] { return field_preset("quadratic", -5); },
      [] { return field_preset("quadratic", 2); },
      [] { return field_preset("quadratic", 13); },
      [] { return field_preset("cyclotomic", 5); },
      [] { return field_preset("cyclotomic", 8); },
      [] { return field_preset("cyclotomic", 12); },
  };
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::mt19937_64 rng(2024);
  while (out.size() < 21) {
    NumberField K = presets[rng() % presets.size()]();
    std::vector<std::uint64_t> S;
    for (auto p : primes) {
      if (rng() % 4 == 0) S.push_back(p);
    }
    const long N = static_cast<long>(rng() % 29) + 2;
    if (compute_s_and_ell(K, S).s > 5) continue;
    out.push_back(bound_input(std::move(K), std::move(S), N, 256, Rounding::Up));
  }
  return out;
}

Outcome ac1_level_table() {
  Outcome o;
  const auto t0 = Clock::now();
  long mismatches = 0;
  for (long N = 2; N <= 10000; ++N) {
    if (level_M(N) != oracle::mixed_level(N)) ++mismatches;
  }
  const double t = seconds_since(t0);
  if (mismatches != 0) o.fail(std::to_string(mismatches) + " mismatches");
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  o.detail = o.pass ? "N in [2, 10^4], 0 mismatches, " + std::to_string(t) + " s" : o.detail;
  return o;
}

Outcome ac2_totient() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = verify_totient_sqrt(1000000);
  const double t = seconds_since(t0);
  const auto* excluded = find_check(r, "excluded point violates");
  if (!r.passed()) o.fail(r.counterexamples.front());
  if (r.cases_checked != 1000000) o.fail("checked " + std::to_string(r.cases_checked) + " cases");
  if (excluded == nullptr || excluded->cases != 2 || excluded->failures != 0) o.fail("excluded points not confirmed");
  if (t >= 30.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "n <= 10^6 exhaustive, n = 2 and n = 6 violate, " + std::to_string(t) + " s";
  return o;
}

Outcome ac3_petho() {
  Outcome o;
  const auto r = verify_petho(10000, 1);
  if (!r.passed()) o.fail(std::to_string(r.counterexamples.size()) + " failures: " + r.counterexamples.front());
  if (r.cases_checked != 10000) o.fail("checked " + std::to_string(r.cases_checked) + " samples");
  if (o.pass) {
    std::ostringstream ss;
    ss << "10^4 samples, 0 failures, worst log-ratio margin " << r.worst_margin;
    o.detail = ss.str();
  }
  return o;
}

Outcome ac4_constant_chain() {
  Outcome o;
  const auto r = verify_constant_chain();
  if (!r.passed()) o.fail(r.counterexamples.front());
  const auto* c140 = find_check(r, "48 log2 log(96 log2) <= 140");
  const auto* c092 = find_check(r, "0.92 C(2,k) >= log 2");
  if (c140 == nullptr || c140->worst_margin <= 0.0 || c140->exact != 0) o.fail("48 log2 log(96 log2) <= 140 not strict");
  if (c092 == nullptr || c092->cases != 2 || c092->worst_margin <= 0.0) o.fail("0.92 C(2,k) >= log 2 not strict");
  if (o.pass) {
    std::ostringstream ss;
    ss << r.cases_checked << " certified cases; margins " << c140->worst_margin << " (140), " << c092->worst_margin
       << " (0.92)";
    o.detail = ss.str();
  }
  return o;
}

Outcome ac5_upsilon() {
  Outcome o;
  const auto r = verify_upsilon_dominance(10, 8, 100);
  if (!r.passed()) o.fail(std::to_string(r.counterexamples.size()) + " violations: " + r.counterexamples.front());
  if (o.pass) o.detail = std::to_string(r.cases_checked) + " comparisons, 0 violations";
  return o;
}

Outcome ac6_headline() {
  Outcome o;
  double worst = 0.0;
  int points = 0;
  for (const auto& in : headline_inputs()) {
    const auto b = theorem12_bound(in);
    const Big ref =
        oracle::ln_final_bound(b.d, b.s, b.ell, b.M, Big(b.disc_abs.get_str()), big_norms(b.places)) /
        oracle::ln(Big(10));
    const double err = oracle::rel_err(as_big(b.log10_final, MPFR_RNDU), ref);
    worst = std::max(worst, err);
    if (err > 1e-20) o.fail(in.field.name + " N=" + std::to_string(in.level_N) + " relative error " + std::to_string(err));
    if (as_big(b.log10_final, MPFR_RNDU) < ref - Big("1e-60")) o.fail(in.field.name + ": Up value below oracle");
    if (points == 0 && std::abs(b.log10_final.to_double() - 78.20501969948) > 1e-10) o.fail("headline log10 off");
    ++points;
  }
  if (o.pass) {
    std::ostringstream ss;
    ss << "Q N=6 log10 = 78.20501969948 plus 20 grid points, worst relative error " << worst;
    o.detail = ss.str();
  }
  return o;
}

Outcome ac7_monotonicity() {
  Outcome o;
  const RoundingContext up{Rounding::Up, 256};
  const RoundingContext down{Rounding::Down, 256};
  std::mt19937_64 rng(77);
  const std::vector<long> primes = {2, 3, 5, 7, 11, 13};
  const std::vector<long> levels = {6, 10, 12, 14, 15, 18, 20, 21, 22, 24};
  int comparisons = 0;
  int inversions = 0;
  auto check = [&](const LogValue& small_up, const LogValue& large_down) {
    ++comparisons;
    if (!lv_certainly_le(small_up, large_down)) ++inversions;
  };
  for (int i = 0; i < 50; ++i) {
    const long d = static_cast<long>(rng() % 4) + 1;
    const long finite = static_cast<long>(rng() % 4);
    std::vector<mpz_class> norms;
    long ell = 1;
    for (long k = 0; k < finite; ++k) {
      const long p = primes[rng() % primes.size()];
      ell = std::max(ell, p);
      norms.emplace_back(p);
    }
    const long s = d == 1 ? 1 + finite : static_cast<long>(rng() % 2) + 1 + finite;
    const long M = levels[rng() % levels.size()];
    const mpz_class D = d == 1 ? mpz_class(1) : mpz_class(static_cast<long>(rng() % 5000) + 3);
    const LogValue base = final_bound_from_parts(d, s, ell, M, D, norms, up);

    const long p_new = primes[rng() % primes.size()];
    auto more = norms;
    more.emplace_back(p_new);
    check(base, final_bound_from_parts(d, s + 1, std::max(ell, p_new), M, D, more, down));
    check(base, final_bound_from_parts(d, s, ell + static_cast<long>(rng() % 10) + 1, M, D, norms, down));
    long M2 = M;
    while (M2 <= M) M2 = levels[rng() % levels.size()] + 6 * static_cast<long>(rng() % 3);
    check(base, final_bound_from_parts(d, s, ell, M2, D, norms, down));
    check(base, final_bound_from_parts(d, s, ell, M, D + static_cast<long>(rng() % 1000) + 1, norms, down));
  }
  if (comparisons != 200) o.fail("ran " + std::to_string(comparisons) + " comparisons");
  if (inversions != 0) o.fail(std::to_string(inversions) + " inversions");
  if (o.pass) o.detail = "200 certified comparisons (place, l, M, |D|), 0 inversions";
  return o;
}

Outcome ac8_rounding() {
  Outcome o;
  int inputs = 0;
  for (const auto& base : headline_inputs()) {
    BigFloat prev_up(64);
    mpfr_set_inf(prev_up.get(), 1);
    BigFloat prev_gap(64);
    mpfr_set_inf(prev_gap.get(), 1);
    for (unsigned bits : {256u, 512u, 1024u, 2048u}) {
      BoundInput in = base;
      in.precision_bits = bits;
      in.rounding = Rounding::Up;
      const auto hi = theorem12_bound(in);
      in.rounding = Rounding::Down;
      const auto lo = theorem12_bound(in);
      const std::string where = base.field.name + " N=" + std::to_string(base.level_N) + " bits=" + std::to_string(bits);
      if (mpfr_cmp(lo.final_bound.ln().get(), hi.final_bound.ln().get()) > 0) o.fail(where + ": Down above Up");
      if (mpfr_cmp(hi.final_bound.ln().get(), prev_up.get()) > 0) o.fail(where + ": Up increased");
      BigFloat gap(bits);
      mpfr_sub(gap.get(), hi.final_bound.ln().get(), lo.final_bound.ln().get(), MPFR_RNDU);
      if (bits > 256 && mpfr_cmp(gap.get(), prev_gap.get()) >= 0) o.fail(where + ": gap did not shrink");
      prev_up = hi.final_bound.ln();
      prev_gap = gap;
    }
    ++inputs;
  }
  if (o.pass) o.detail = std::to_string(inputs) + " inputs at 256/512/1024/2048 bits";
  return o;
}

Outcome ac9_cyclotomic() {
  Outcome o;
  const auto r = verify_cyclotomic_disc(200, 10000);
  if (!r.passed()) o.fail(r.counterexamples.front());
  long gap_cases = 0;
  for (long N = 6; N <= 10000; ++N) {
    const auto ps = oracle::distinct_primes(static_cast<std::uint64_t>(N));
    if (ps.size() < 2) continue;
    long phi = N;
    for (auto p : ps) phi = phi / static_cast<long>(p) * (static_cast<long>(p) - 1);
    if (N - phi < 4) o.fail("N - phi(N) < 4 at N=" + std::to_string(N));
    ++gap_cases;
  }
  for (unsigned long N = 3; N <= 200; ++N) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), N, N);
    if (cyclotomic_disc_abs(N) > bound) o.fail("|D| > N^N at N=" + std::to_string(N));
  }
  if (cyclotomic_disc_abs(5) != 125 || cyclotomic_disc_abs(12) != 144 || cyclotomic_disc_abs(3) != 3) {
    o.fail("closed discriminant formula disagrees with known values");
  }
  if (o.pass) o.detail = std::to_string(gap_cases) + " gap cases and N in [3, 200], 0 violations";
  return o;
}

Outcome ac10_witness() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream ss;
  for (const auto& S : std::vector<std::vector<std::uint64_t>>{{}, {2, 3}, {2, 3, 5}}) {
    const auto points = enumerate_witnesses(S, 1000);
    const auto b = lambda_line_bound(S);
    if (b.M != 6) o.fail("level 2 did not map to M = 6");
    const auto r = check_witnesses_against_bound(points, b);
    if (!r.passed()) o.fail(r.violations.front());
    ss << points.size() << " pts max h " << r.max_height_up.to_double(MPFR_RNDU) << " vs log10 B "
       << r.bound_log10_down.to_double(MPFR_RNDD) << "; ";
  }
  std::mt19937_64 rng(10);
  int sampled = 0;
  while (sampled < 10000) {
    mpq_class l(static_cast<long>(rng() % 2000001) - 1000000, static_cast<long>(rng() % 1000000) + 1);
    l.canonicalize();
    if (l == 0 || l == 1) continue;
    const mpq_class j = j_of_lambda(l);
    if (j_of_lambda(1 - l) != j || j_of_lambda(1 / l) != j) o.fail("symmetry broken at lambda=" + l.get_str());
    ++sampled;
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) {
    ss << "S3 symmetry on 10^4 rationals, " << t << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome ac11_splitting() {
  Outcome o;
  const auto K = field_preset("gaussian");
  int primes = 0;
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    ++primes;
    const auto r = split_prime(K, p);
    int ef = 0;
    for (const auto& v : r.places) ef += v.e * v.f;
    if (ef != 2) o.fail("sum e f != 2 at p=" + std::to_string(p));
    bool ok = false;
    if (p == 2) {
      ok = r.places.size() == 1 && r.places[0].e == 2 && r.places[0].f == 1;
    } else if (p % 4 == 1) {
      ok = r.places.size() == 2 && r.places[0].e == 1 && r.places[0].f == 1 && r.places[1].f == 1;
    } else {
      ok = r.places.size() == 1 && r.places[0].e == 1 && r.places[0].f == 2;
    }
    if (!ok) o.fail("wrong decomposition at p=" + std::to_string(p));
  }
  if (o.pass) o.detail = std::to_string(primes) + " primes match the quadratic-residue rule";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 M-table conformance", ac1_level_table},
      {"AC2 totient inequality", ac2_totient},
      {"AC3 Petho property", ac3_petho},
      {"AC4 constant-chain certificate", ac4_constant_chain},
      {"AC5 Upsilon dominance", ac5_upsilon},
      {"AC6 headline bound reproduction", ac6_headline},
      {"AC7 monotonicity suite", ac7_monotonicity},
      {"AC8 rounding soundness", ac8_rounding},
      {"AC9 cyclotomic lift", ac9_cyclotomic},
      {"AC10 witness harness", ac10_witness},
      {"AC11 splitting correctness", ac11_splitting},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
