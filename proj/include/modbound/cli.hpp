#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modbound/numfield.hpp"

namespace modbound {

inline constexpr const char* kToolName = "modbound";
inline constexpr const char* kToolVersion = "0.1.0";

// Environment variable holding the default working precision in bits.
inline constexpr const char* kPrecisionEnv = "MODBOUND_PRECISION";

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitMalformed = 2,
};

// "preset:Q", "preset:cyclotomic:5", "preset:quadratic:-5", "poly:1,0,1"
// (coefficients lowest degree first) or a JSON field spec object.
NumberField parse_field_spec(const std::string& text);

// Comma separated primes; the empty string is the empty set.
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

// Subcommands: bound, field, constants, verify, witness.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modbound
