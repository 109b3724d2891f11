#include "modbound/logscale.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

void check_precision(unsigned bits) {
  if (bits < 16 || bits > kMaxPrecisionBits) {
    throw UsageError("precision must lie in [16, " + std::to_string(kMaxPrecisionBits) + "] bits, got " +
                     std::to_string(bits));
  }
}

void check_compatible(const LogValue& a, const LogValue& b, const char* op) {
  if (a.rounding() != b.rounding()) {
    throw UsageError(std::string(op) + ": operands carry different rounding directions");
  }
  if (a.precision() != b.precision()) {
    throw UsageError(std::string(op) + ": operands carry different precisions (" + std::to_string(a.precision()) +
                     " vs " + std::to_string(b.precision()) + ")");
  }
}

// ln values beyond this magnitude skip the exp/log route in lv_add.
constexpr double kExpRouteLimit = 1.0e8;

mpq_class parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty numeric literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      mpq_class q(s, 10);
      q.canonicalize();
      if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
      return q;
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed rational literal '" + s + "'");
    }
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) throw DomainError("malformed decimal literal '" + s + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --scale;
    } else {
      throw DomainError("malformed decimal literal '" + s + "'");
    }
  }
  if (!any_digit) throw DomainError("malformed decimal literal '" + s + "'");
  if (i < s.size()) {
    std::string exponent = s.substr(i + 1);
    try {
      std::size_t used = 0;
      long e = std::stol(exponent, &used);
      if (used != exponent.size()) throw std::invalid_argument("trailing");
      scale += e;
    } catch (const std::exception&) {
      throw DomainError("malformed exponent in '" + s + "'");
    }
  }
  mpz_class mantissa(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mantissa, ten_pow) : mpq_class(mantissa * ten_pow);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

const char* to_string(Rounding r) { return r == Rounding::Up ? "up" : "down"; }

LogValue LogValue::from_rational(const mpq_class& x, RoundingContext ctx) {
  check_precision(ctx.bits);
  if (sgn(x) <= 0) throw DomainError("logscale: value must be positive");
  const mpfr_rnd_t rnd = to_mpfr(ctx.dir);
  BigFloat v(ctx.bits);
  mpfr_set_q(v.get(), x.get_mpq_t(), rnd);
  mpfr_log(v.get(), v.get(), rnd);
  return LogValue(std::move(v), ctx.dir);
}

LogValue LogValue::from_integer(const mpz_class& x, RoundingContext ctx) {
  check_precision(ctx.bits);
  if (sgn(x) <= 0) throw DomainError("logscale: value must be positive");
  const mpfr_rnd_t rnd = to_mpfr(ctx.dir);
  BigFloat v(ctx.bits);
  mpfr_set_z(v.get(), x.get_mpz_t(), rnd);
  mpfr_log(v.get(), v.get(), rnd);
  return LogValue(std::move(v), ctx.dir);
}

LogValue LogValue::from_decimal(std::string_view literal, RoundingContext ctx) {
  return from_rational(parse_decimal(literal), ctx);
}

LogValue LogValue::one(RoundingContext ctx) {
  check_precision(ctx.bits);
  return LogValue(BigFloat(ctx.bits), ctx.dir);
}

LogValue LogValue::euler_e(RoundingContext ctx) {
  check_precision(ctx.bits);
  BigFloat v(ctx.bits);
  mpfr_set_ui(v.get(), 1, MPFR_RNDN);
  return LogValue(std::move(v), ctx.dir);
}

LogValue LogValue::pi(RoundingContext ctx) {
  check_precision(ctx.bits);
  const mpfr_rnd_t rnd = to_mpfr(ctx.dir);
  BigFloat v(ctx.bits);
  mpfr_const_pi(v.get(), rnd);
  mpfr_log(v.get(), v.get(), rnd);
  return LogValue(std::move(v), ctx.dir);
}

LogValue LogValue::from_ln(BigFloat ln_value, Rounding dir) {
  check_precision(static_cast<unsigned>(ln_value.precision()));
  if (mpfr_number_p(ln_value.get()) == 0) throw DomainError("logscale: ln value must be finite");
  return LogValue(std::move(ln_value), dir);
}

mpq_class parse_real_literal(std::string_view literal) { return parse_decimal(literal); }

LogValue lv_from_real(const mpq_class& x, RoundingContext ctx) { return LogValue::from_rational(x, ctx); }

LogValue lv_from_real(std::string_view literal, RoundingContext ctx) {
  return LogValue::from_decimal(literal, ctx);
}

LogValue lv_mul(const LogValue& a, const LogValue& b) {
  check_compatible(a, b, "lv_mul");
  BigFloat v(a.precision());
  mpfr_add(v.get(), a.ln().get(), b.ln().get(), to_mpfr(a.rounding()));
  return LogValue::from_ln(std::move(v), a.rounding());
}

LogValue lv_pow(const LogValue& a, const mpq_class& k) {
  if (sgn(k) < 0) throw DomainError("lv_pow: exponent must be non-negative");
  BigFloat v(a.precision());
  mpfr_mul_q(v.get(), a.ln().get(), k.get_mpq_t(), to_mpfr(a.rounding()));
  return LogValue::from_ln(std::move(v), a.rounding());
}

LogValue lv_pow(const LogValue& a, long k) { return lv_pow(a, mpq_class(k)); }

LogValue lv_ln(const LogValue& a) {
  if (a.ln().sign() <= 0) {
    throw DomainError("lv_ln: argument must exceed 1 (ln value " + a.ln().to_string(6) + ")");
  }
  BigFloat v(a.precision());
  mpfr_log(v.get(), a.ln().get(), to_mpfr(a.rounding()));
  return LogValue::from_ln(std::move(v), a.rounding());
}

LogValue lv_inv(const LogValue& a) {
  BigFloat v(a.precision());
  mpfr_neg(v.get(), a.ln().get(), MPFR_RNDN);
  return LogValue::from_ln(std::move(v), opposite(a.rounding()));
}

LogValue lv_add(const LogValue& a, const LogValue& b) {
  check_compatible(a, b, "lv_add");
  const mpfr_rnd_t rnd = to_mpfr(a.rounding());
  const mpfr_prec_t prec = a.precision();
  BigFloat v(prec);
  if (std::fabs(a.ln_approx()) < kExpRouteLimit && std::fabs(b.ln_approx()) < kExpRouteLimit) {
    // ln(exp x + exp y) with every step rounded the same way: monotone in x and y.
    BigFloat ea(prec);
    BigFloat eb(prec);
    mpfr_exp(ea.get(), a.ln().get(), rnd);
    mpfr_exp(eb.get(), b.ln().get(), rnd);
    mpfr_add(v.get(), ea.get(), eb.get(), rnd);
    mpfr_log(v.get(), v.get(), rnd);
    return LogValue::from_ln(std::move(v), a.rounding());
  }
  // max + log1p(exp(min - max)); the exact function at the rounded inputs
  // is still bounded in the right direction.
  const bool a_big = mpfr_cmp(a.ln().get(), b.ln().get()) >= 0;
  const BigFloat& hi = a_big ? a.ln() : b.ln();
  const BigFloat& lo = a_big ? b.ln() : a.ln();
  BigFloat t(prec);
  mpfr_sub(t.get(), lo.get(), hi.get(), rnd);
  mpfr_exp(t.get(), t.get(), rnd);
  mpfr_log1p(t.get(), t.get(), rnd);
  mpfr_add(v.get(), hi.get(), t.get(), rnd);
  return LogValue::from_ln(std::move(v), a.rounding());
}

LogValue lv_min(const LogValue& a, const LogValue& b) {
  check_compatible(a, b, "lv_min");
  return mpfr_cmp(a.ln().get(), b.ln().get()) <= 0 ? a : b;
}

LogValue lv_max(const LogValue& a, const LogValue& b) {
  check_compatible(a, b, "lv_max");
  return mpfr_cmp(a.ln().get(), b.ln().get()) >= 0 ? a : b;
}

BigFloat lv_log10(const LogValue& a) {
  const mpfr_prec_t prec = a.precision();
  const bool up = a.rounding() == Rounding::Up;
  const bool nonneg = a.ln().sign() >= 0;
  // Dividing a non-negative numerator by a smaller ln10 makes it larger;
  // for a negative numerator the larger ln10 does.
  BigFloat ln10(prec);
  mpfr_set_ui(ln10.get(), 10, MPFR_RNDN);
  mpfr_log(ln10.get(), ln10.get(), (up == nonneg) ? MPFR_RNDD : MPFR_RNDU);
  BigFloat out(prec);
  mpfr_div(out.get(), a.ln().get(), ln10.get(), to_mpfr(a.rounding()));
  return out;
}

double lv_log10_approx(const LogValue& a) { return lv_log10(a).to_double(to_mpfr(a.rounding())); }

bool lv_certainly_le(const LogValue& upper_of_small, const LogValue& lower_of_large) {
  if (upper_of_small.rounding() != Rounding::Up || lower_of_large.rounding() != Rounding::Down) {
    throw UsageError("lv_certainly_le: left side must be rounded up and right side rounded down");
  }
  return mpfr_cmp(upper_of_small.ln().get(), lower_of_large.ln().get()) <= 0;
}

BigFloat lv_log_margin(const LogValue& upper_of_small, const LogValue& lower_of_large) {
  if (upper_of_small.rounding() != Rounding::Up || lower_of_large.rounding() != Rounding::Down) {
    throw UsageError("lv_log_margin: left side must be rounded up and right side rounded down");
  }
  BigFloat out(std::max(upper_of_small.ln().precision(), lower_of_large.ln().precision()));
  mpfr_sub(out.get(), lower_of_large.ln().get(), upper_of_small.ln().get(), MPFR_RNDD);
  return out;
}

}  // namespace modbound
