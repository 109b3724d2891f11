#pragma once

#include <gmpxx.h>

#include "modbound/bigfloat.hpp"

namespace modbound {

// Closed interval [lo, hi] with outward-rounded endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits);  // [0, 0]
  static Interval exact(const mpq_class& q, mpfr_prec_t bits);
  static Interval from_double(double x, mpfr_prec_t bits);
  static Interval ln_of_integer(const mpz_class& n, mpfr_prec_t bits);
  static Interval pi(mpfr_prec_t bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const mpq_class& q, const Interval& a);
// b must not contain zero.
Interval operator/(const Interval& a, const Interval& b);
Interval iv_log(const Interval& a);  // a.lo > 0
Interval iv_exp(const Interval& a);
Interval iv_sqr(const Interval& a);
Interval iv_sqrt(const Interval& a);  // a.lo >= 0
// a^e = exp(e log a), a.lo > 0.
Interval iv_pow(const Interval& a, const Interval& e);

}  // namespace modbound
