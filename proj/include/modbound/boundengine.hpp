#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbound/constants.hpp"
#include "modbound/logscale.hpp"
#include "modbound/numfield.hpp"
#include "modbound/regulator.hpp"

namespace modbound {

// Mixed level: N if N has two distinct prime factors, 3N if N = 2^k, 2N if N = p^k with p odd.
long level_M(long N);

enum class SplittingMode {
  Auto,        // preset and override data as given, over-approximate uncertain primes
  Exact,       // uncertain primes are an error
  OverApprox,  // over-approximate every index prime that lacks an override
};
const char* to_string(SplittingMode mode);
SplittingMode splitting_mode_from_string(const std::string& text);

struct PlaceCount {
  long s = 0;    // infinite places plus finite places of S
  long ell = 1;  // largest prime of S, or 1
  std::vector<FinitePlace> places;
  std::vector<std::string> flags;
};

PlaceCount compute_s_and_ell(const NumberField& field, const std::vector<std::uint64_t>& s_primes,
                             SplittingMode mode = SplittingMode::Auto);

// sqrt(X) (log X)^(d phi(M)) P^phi(M) with X = M^(dM) |D|^phi(M).
LogValue delta_from_parts(long d, const mpz_class& disc_abs, const std::vector<mpz_class>& place_norms, long M,
                          RoundingContext ctx = {});
LogValue delta_of(const NumberField& field, const std::vector<FinitePlace>& places, long M,
                  RoundingContext ctx = {});

// (2^14 d s M^2)^(2sM) (log dM)^(3sM) l^(dM) Delta(M).
LogValue final_bound_from_parts(long d, long s, long ell, long M, const mpz_class& disc_abs,
                                const std::vector<mpz_class>& place_norms, RoundingContext ctx = {});

// 40 d s r^(2r) zeta^r N^8 U R log(d^2 s r^(4r) zeta^s N^16 U R), U = upsilon tilde, r = s - 1, 0^0 = 1.
LogValue lemma41_bound(long d, long s, long ell, long N, const LogValue& rs_upper);

struct CyclotomicLift {
  long s_tilde_bound = 0;      // s phi(N)
  long d_tilde_bound = 0;      // d phi(N)
  LogValue disc_tilde_bound;   // N^(dN) |D|^phi(N)
  LogValue product_lift;       // 4^(s phi(N)) P^phi(N)
  long omega_tilde_bound = 0;  // 2 d^2 phi(N)^2
};
CyclotomicLift cyclotomic_lift(const NumberField& field, const std::vector<FinitePlace>& places, long s, long N,
                               RoundingContext ctx = {});

// Exact check of |D~| <= N^(dN) |D|^phi(N).
bool lift_disc_inequality_holds(const mpz_class& disc_tilde, long d, const mpz_class& disc_abs, long N);

struct BoundInput {
  NumberField field;
  std::vector<std::uint64_t> s_primes;
  long level_N = 2;
  bool cusp_assertion = false;
  unsigned precision_bits = kDefaultPrecisionBits;
  Rounding rounding = Rounding::Up;
  SplittingMode splitting = SplittingMode::Auto;
  bool assert_cyclotomic = false;  // the caller asserts zeta_M lies in K
  std::optional<mpq_class> hR;
};

struct BoundBreakdown {
  long N = 0;
  long M = 0;
  long phi_M = 0;
  long d = 0;
  long s = 0;
  long ell = 1;
  mpz_class disc_abs;
  long omega_bound = 2;
  std::vector<FinitePlace> places;
  LogValue place_log_product;
  LogValue delta_M;
  LogValue branch_small_j;  // 16 s
  LogValue branch_small_q;  // 6 s M
  LogValue zeta_lifted;     // zeta(d phi(M))
  UpsilonPair upsilon_lifted;
  SRegulatorReport regulator;
  CyclotomicLift lift;
  std::optional<LogValue> lemma41_bound;
  LogValue final_bound;
  BigFloat log10_final;
  std::vector<std::string> provenance_flags;
  RoundingContext context;
};

BoundBreakdown theorem12_bound(const BoundInput& input);

}  // namespace modbound
