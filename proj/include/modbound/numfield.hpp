#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modbound/polynomial.hpp"

namespace modbound {

// Ramification index and residue degree of one prime above p.
struct PlaceShape {
  int e = 1;
  int f = 1;
  auto operator<=>(const PlaceShape&) const = default;
};

struct FinitePlace {
  std::uint64_t p = 0;
  int f = 1;
  int e = 1;
  mpz_class norm;  // p^f
  bool over_approximated = false;
};

struct NumberField {
  std::string name;  // preset label, or "poly"
  poly::ZPoly min_poly;
  int degree = 0;
  int r1 = 0;
  int r2 = 0;
  mpz_class disc_abs;
  bool disc_is_exact = false;
  long omega_bound = 2;
  bool omega_is_exact = false;
  // True when Z[alpha] is known to be the maximal order, so reduction of the
  // minimal polynomial mod p describes every prime.
  bool order_is_maximal = false;
  std::map<std::uint64_t, std::vector<PlaceShape>> splitting_overrides;

  int infinite_places() const { return r1 + r2; }
};

struct FieldOptions {
  bool assert_irreducible = false;
  std::optional<mpz_class> exact_disc;
  std::optional<long> exact_omega;
  std::map<std::uint64_t, std::vector<PlaceShape>> splitting_overrides;
};

// Builds a field from a monic integer polynomial (coefficients lowest first).
NumberField field_from_poly(const std::vector<mpz_class>& coeffs, const FieldOptions& options = {});

// "Q", "gaussian", "eisenstein", "quadratic" (parameter m squarefree),
// "cyclotomic" (parameter N >= 3).
NumberField field_preset(const std::string& name, std::optional<long> parameter = std::nullopt);

std::uint64_t euler_totient(std::uint64_t n);
bool is_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Closed form |disc(Q(zeta_N))| = N^phi(N) / prod_{p | N} p^{phi(N)/(p-1)}.
mpz_class cyclotomic_disc_abs(std::uint64_t n);

enum class SplitStatus {
  Dedekind,   // p^2 does not divide disc(min_poly): reduction mod p is valid
  Preset,     // index prime, but Z[alpha] is maximal for this preset
  Override,   // user or preset splitting data
  Uncertain,  // index prime without certified data; places are the raw mod-p shape
};
const char* to_string(SplitStatus status);

struct SplitResult {
  std::vector<FinitePlace> places;
  SplitStatus status = SplitStatus::Dedekind;
  bool index_divisor_suspected = false;  // p^2 | disc_abs
};

SplitResult split_prime(const NumberField& field, std::uint64_t p);

long omega_upper(const NumberField& field);

}  // namespace modbound
