#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbound/bigfloat.hpp"
#include "modbound/boundengine.hpp"

namespace modbound {

// A rational point on the lambda-line together with its j-invariant.
struct LambdaPoint {
  mpq_class lambda;
  mpq_class j_value;            // 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2), canonical
  BigFloat j_height_up{128};    // log max(|num j|, den j), rounded up
  BigFloat j_height_down{128};  // the same, rounded down
  bool is_S_integral = false;

  double j_height() const { return j_height_up.to_double(); }
};

// Throws DomainError for lambda in {0, 1}.
mpq_class j_of_lambda(const mpq_class& lambda);

// lambda, 1 - lambda, 1/lambda, 1/(1 - lambda), (lambda - 1)/lambda, lambda/(lambda - 1).
std::array<mpq_class, 6> lambda_orbit(const mpq_class& lambda);

// True when every prime factor of n lies in s_primes.
bool supported_on(const mpz_class& n, const std::vector<std::uint64_t>& s_primes);

LambdaPoint make_lambda_point(const mpq_class& lambda, const std::vector<std::uint64_t>& s_primes,
                              unsigned bits = 128);

// S-integral points with lambda = a/b reduced, max(|a|, |b|) <= height_cap, ordered by (b, a).
std::vector<LambdaPoint> enumerate_witnesses(const std::vector<std::uint64_t>& s_primes, long height_cap,
                                             unsigned bits = 128);

struct WitnessReport {
  std::size_t points_checked = 0;
  std::optional<mpq_class> max_lambda;
  std::optional<mpq_class> max_j;
  BigFloat max_height_up{128};
  BigFloat bound_log10_down{128};
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

// Compares every S-integral point's height (rounded up) with the final bound (rounded down).
// The breakdown must be for K = Q at level 2.
WitnessReport check_witnesses_against_bound(const std::vector<LambdaPoint>& points, const BoundBreakdown& breakdown);

// Bound for K = Q, level 2 (M = 6), three cusps asserted.
BoundBreakdown lambda_line_bound(const std::vector<std::uint64_t>& s_primes, unsigned bits = kDefaultPrecisionBits);

}  // namespace modbound
