#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "modbound/bigfloat.hpp"

namespace modbound {

enum class Rounding { Up, Down };

constexpr Rounding opposite(Rounding r) { return r == Rounding::Up ? Rounding::Down : Rounding::Up; }
constexpr mpfr_rnd_t to_mpfr(Rounding r) { return r == Rounding::Up ? MPFR_RNDU : MPFR_RNDD; }
const char* to_string(Rounding r);

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMaxPrecisionBits = 1u << 20;

// Rounding direction plus working precision, passed to every function
// that produces a certified magnitude.
struct RoundingContext {
  Rounding dir = Rounding::Up;
  unsigned bits = kDefaultPrecisionBits;

  RoundingContext flipped() const { return {opposite(dir), bits}; }
};

// A positive real x held as ln(x). An Up value is an upper bound for the
// exact expression it was computed from, a Down value a lower bound.
//
// Values below 1 are representable (negative ln); lv_ln refuses them.
class LogValue {
 public:
  static LogValue from_integer(const mpz_class& x, RoundingContext ctx);
  static LogValue from_integer(long x, RoundingContext ctx) { return from_integer(mpz_class(x), ctx); }
  static LogValue from_rational(const mpq_class& x, RoundingContext ctx);
  // Accepts "123", "-1.5e3", "3/7", "2.718281828"; parsed exactly.
  static LogValue from_decimal(std::string_view literal, RoundingContext ctx);
  static LogValue one(RoundingContext ctx);
  static LogValue euler_e(RoundingContext ctx);  // ln = 1 exactly
  static LogValue pi(RoundingContext ctx);
  // Wraps an already directed-rounded ln; the caller vouches for the direction.
  static LogValue from_ln(BigFloat ln_value, Rounding dir);

  Rounding rounding() const { return dir_; }
  unsigned precision() const { return static_cast<unsigned>(ln_.precision()); }
  RoundingContext context() const { return {dir_, precision()}; }
  const BigFloat& ln() const { return ln_; }
  double ln_approx() const { return ln_.to_double(); }

 private:
  LogValue(BigFloat ln_value, Rounding dir) : ln_(std::move(ln_value)), dir_(dir) {}

  BigFloat ln_;
  Rounding dir_;
};

// Exact value of "123", "-1.5e3", "3/7", "2.718281828".
mpq_class parse_real_literal(std::string_view literal);

LogValue lv_from_real(const mpq_class& x, RoundingContext ctx);
LogValue lv_from_real(std::string_view literal, RoundingContext ctx);

LogValue lv_mul(const LogValue& a, const LogValue& b);
LogValue lv_pow(const LogValue& a, const mpq_class& k);
LogValue lv_pow(const LogValue& a, long k);
LogValue lv_ln(const LogValue& a);
// 1/a. The direction flips: the reciprocal of a lower bound is an upper bound.
LogValue lv_inv(const LogValue& a);
LogValue lv_add(const LogValue& a, const LogValue& b);
LogValue lv_min(const LogValue& a, const LogValue& b);
LogValue lv_max(const LogValue& a, const LogValue& b);

// ln(a)/ln(10) rounded in a's direction.
BigFloat lv_log10(const LogValue& a);
double lv_log10_approx(const LogValue& a);

// Certified a <= b: requires a rounded Up and b rounded Down.
bool lv_certainly_le(const LogValue& upper_of_small, const LogValue& lower_of_large);
// ln(b_down) - ln(a_up), rounded down: a certified lower bound on ln(b/a).
BigFloat lv_log_margin(const LogValue& upper_of_small, const LogValue& lower_of_large);

inline LogValue operator*(const LogValue& a, const LogValue& b) { return lv_mul(a, b); }
inline LogValue operator+(const LogValue& a, const LogValue& b) { return lv_add(a, b); }

}  // namespace modbound
