#include "modbound/interval.hpp"

#include <algorithm>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

BigFloat make(mpfr_prec_t bits) { return BigFloat(bits); }

void min_into(BigFloat& acc, const BigFloat& x) {
  if (mpfr_cmp(x.get(), acc.get()) < 0) mpfr_set(acc.get(), x.get(), MPFR_RNDD);
}

void max_into(BigFloat& acc, const BigFloat& x) {
  if (mpfr_cmp(x.get(), acc.get()) > 0) mpfr_set(acc.get(), x.get(), MPFR_RNDU);
}

}  // namespace

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

Interval Interval::exact(const mpq_class& q, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double x, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_d(r.lo_.get(), x, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), x, MPFR_RNDU);
  return r;
}

Interval Interval::ln_of_integer(const mpz_class& n, mpfr_prec_t bits) {
  if (n <= 0) throw DomainError("log of a non-positive integer");
  Interval r(bits);
  BigFloat x(std::max<mpfr_prec_t>(bits, static_cast<mpfr_prec_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 2));
  mpfr_set_z(x.get(), n.get_mpz_t(), MPFR_RNDN);  // exact at this precision
  mpfr_log(r.lo_.get(), x.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), x.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(a.precision());
  mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(a.precision());
  mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t bits = a.precision();
  Interval r(bits);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      BigFloat down = make(bits);
      BigFloat up = make(bits);
      mpfr_mul(down.get(), x->get(), y->get(), MPFR_RNDD);
      mpfr_mul(up.get(), x->get(), y->get(), MPFR_RNDU);
      if (first) {
        r.lo() = down;
        r.hi() = up;
        first = false;
      } else {
        min_into(r.lo(), down);
        max_into(r.hi(), up);
      }
    }
  }
  return r;
}

Interval operator*(const mpq_class& q, const Interval& a) { return Interval::exact(q, a.precision()) * a; }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const mpfr_prec_t bits = a.precision();
  Interval inv(bits);
  mpfr_ui_div(inv.lo().get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi().get(), 1, b.lo().get(), MPFR_RNDU);
  return a * inv;
}

Interval iv_log(const Interval& a) {
  if (!a.certainly_positive()) throw DomainError("interval log of a possibly non-positive value");
  Interval r(a.precision());
  mpfr_log(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval iv_exp(const Interval& a) {
  Interval r(a.precision());
  mpfr_exp(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_exp(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval iv_sqr(const Interval& a) {
  Interval r(a.precision());
  BigFloat l2 = make(a.precision());
  BigFloat h2 = make(a.precision());
  if (a.contains_zero()) {
    mpfr_sqr(l2.get(), a.lo().get(), MPFR_RNDU);
    mpfr_sqr(h2.get(), a.hi().get(), MPFR_RNDU);
    mpfr_set_zero(r.lo().get(), 1);
    mpfr_max(r.hi().get(), l2.get(), h2.get(), MPFR_RNDU);
    return r;
  }
  const bool neg = a.certainly_negative();
  const BigFloat& near = neg ? a.hi() : a.lo();
  const BigFloat& far = neg ? a.lo() : a.hi();
  mpfr_sqr(r.lo().get(), near.get(), MPFR_RNDD);
  mpfr_sqr(r.hi().get(), far.get(), MPFR_RNDU);
  return r;
}

Interval iv_sqrt(const Interval& a) {
  if (!a.certainly_nonnegative()) throw DomainError("interval sqrt of a possibly negative value");
  Interval r(a.precision());
  mpfr_sqrt(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval iv_pow(const Interval& a, const Interval& e) { return iv_exp(e * iv_log(a)); }

}  // namespace modbound
