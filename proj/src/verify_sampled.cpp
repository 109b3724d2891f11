#include <cmath>
#include <random>
#include <sstream>

#include "modbound/bigfloat.hpp"
#include "modbound/lemmaverify.hpp"
#include "verify_recorder.hpp"

namespace modbound {

namespace {

constexpr mpfr_prec_t kBits = 256;
constexpr mpfr_prec_t kPethoBits = 128;
// Wide enough to hold 2x + x^2 + y^2 exactly for any pair of doubles.
constexpr mpfr_prec_t kExactBits = 2300;

BigFloat bf(double x, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_d(r.get(), x, MPFR_RNDN);
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// ---- Petho ---------------------------------------------------------------

class PethoFunction {
 public:
  PethoFunction(double a, double b, double h) : a_(bf(a, kPethoBits)), b_(bf(b, kPethoBits)), h_(bf(h, kPethoBits)), hm1_(bf(h - 1.0, kPethoBits)) {}

  // (log x)^k rounded in rnd, x >= 2, k >= 0.
  BigFloat pow_log(const BigFloat& x, const BigFloat& k, mpfr_rnd_t rnd) const {
    BigFloat out(kPethoBits);
    if (mpfr_zero_p(k.get()) != 0) {
      mpfr_set_ui(out.get(), 1, rnd);
      return out;
    }
    mpfr_log(out.get(), x.get(), rnd);
    mpfr_log(out.get(), out.get(), rnd);
    mpfr_mul(out.get(), out.get(), k.get(), rnd);
    mpfr_exp(out.get(), out.get(), rnd);
    return out;
  }

  // x - a (log x)^h - b, rounded in rnd.
  BigFloat value(const BigFloat& x, mpfr_rnd_t rnd) const {
    const mpfr_rnd_t opp = rnd == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU;
    BigFloat t = pow_log(x, h_, opp);
    mpfr_mul(t.get(), t.get(), a_.get(), opp);
    BigFloat out(kPethoBits);
    mpfr_sub(out.get(), x.get(), t.get(), rnd);
    mpfr_sub(out.get(), out.get(), b_.get(), rnd);
    return out;
  }

  // Upper bound of F'(x) deficit g(x) = a h (log x)^(h-1) / x.
  BigFloat slope_term_up(const BigFloat& x) const {
    BigFloat t = pow_log(x, hm1_, MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), a_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), h_.get(), MPFR_RNDU);
    mpfr_div(t.get(), t.get(), x.get(), MPFR_RNDU);
    return t;
  }

  bool increasing_from(const BigFloat& x, const BigFloat& threshold) const {
    return mpfr_cmp(x.get(), threshold.get()) >= 0 && mpfr_cmp_ui(slope_term_up(x).get(), 1) < 0;
  }

  // 2^h (b^(1/h) + a^(1/h) log(h^h a))^h rounded down; false when log(h^h a) <= 0.
  bool closed_form_down(BigFloat& out) const {
    BigFloat lg(kPethoBits);
    BigFloat t(kPethoBits);
    mpfr_log(lg.get(), h_.get(), MPFR_RNDD);
    mpfr_mul(lg.get(), lg.get(), h_.get(), MPFR_RNDD);
    mpfr_log(t.get(), a_.get(), MPFR_RNDD);
    mpfr_add(lg.get(), lg.get(), t.get(), MPFR_RNDD);
    if (mpfr_sgn(lg.get()) <= 0) return false;
    BigFloat a_root(kPethoBits);
    mpfr_log(a_root.get(), a_.get(), MPFR_RNDD);
    mpfr_div(a_root.get(), a_root.get(), h_.get(), MPFR_RNDD);
    mpfr_exp(a_root.get(), a_root.get(), MPFR_RNDD);
    BigFloat sum(kPethoBits);
    mpfr_mul(sum.get(), a_root.get(), lg.get(), MPFR_RNDD);
    if (mpfr_sgn(b_.get()) > 0) {
      mpfr_log(t.get(), b_.get(), MPFR_RNDD);
      mpfr_div(t.get(), t.get(), h_.get(), MPFR_RNDD);
      mpfr_exp(t.get(), t.get(), MPFR_RNDD);
      mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDD);
    }
    mpfr_log(sum.get(), sum.get(), MPFR_RNDD);
    mpfr_mul(sum.get(), sum.get(), h_.get(), MPFR_RNDD);
    mpfr_exp(sum.get(), sum.get(), MPFR_RNDD);
    mpfr_ui_pow(t.get(), 2, h_.get(), MPFR_RNDD);
    out = BigFloat(kPethoBits);
    mpfr_mul(out.get(), sum.get(), t.get(), MPFR_RNDD);
    return true;
  }

  const BigFloat& h() const { return h_; }

 private:
  BigFloat a_;
  BigFloat b_;
  BigFloat h_;
  BigFloat hm1_;
};

// hi - lo <= 2^-bits hi.
bool close_enough(const BigFloat& lo, const BigFloat& hi, unsigned long bits) {
  BigFloat gap(kPethoBits);
  mpfr_sub(gap.get(), hi.get(), lo.get(), MPFR_RNDU);
  mpfr_mul_2ui(gap.get(), gap.get(), bits, MPFR_RNDU);
  return mpfr_cmp(gap.get(), hi.get()) <= 0;
}

}  // namespace

PethoOutcome petho_case(double a, double b, double h) {
  PethoOutcome out;
  const PethoFunction F(a, b, h);
  BigFloat U(kPethoBits);
  if (!F.closed_form_down(U)) return out;
  out.bound_down = U.to_double(MPFR_RNDD);

  // Past max(e^(h-1), 2) the term g(x) decreases, so g(x) < 1 at one point makes F increasing beyond it.
  BigFloat threshold(kPethoBits);
  mpfr_set_d(threshold.get(), h - 1.0, MPFR_RNDN);
  mpfr_exp(threshold.get(), threshold.get(), MPFR_RNDU);
  if (mpfr_cmp_ui(threshold.get(), 2) < 0) mpfr_set_ui(threshold.get(), 2, MPFR_RNDN);
  if (mpfr_cmp(U.get(), threshold.get()) < 0 || !F.increasing_from(U, threshold)) return out;
  if (mpfr_sgn(F.value(U, MPFR_RNDD).get()) <= 0) return out;
  out.certified = true;

  BigFloat lo = threshold;
  BigFloat hi = U;
  BigFloat mid(kPethoBits);
  if (!F.increasing_from(lo, threshold)) {
    for (int i = 0; i < 200 && !close_enough(lo, hi, 16); ++i) {
      mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      if (F.increasing_from(mid, threshold)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    lo = hi;
  }
  // F is increasing on [lo, inf).
  if (mpfr_sgn(F.value(lo, MPFR_RNDU).get()) >= 0) {
    out.root_hi = lo.to_double(MPFR_RNDU);
    return out;
  }
  hi = U;
  for (int i = 0; i < 400 && !close_enough(lo, hi, 56); ++i) {
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    if (mpfr_cmp(mid.get(), lo.get()) <= 0 || mpfr_cmp(mid.get(), hi.get()) >= 0) break;
    if (mpfr_sgn(F.value(mid, MPFR_RNDU).get()) < 0) {
      lo = mid;
    } else if (mpfr_sgn(F.value(mid, MPFR_RNDD).get()) > 0) {
      hi = mid;
    } else {
      break;
    }
  }
  out.root_bracketed = true;
  out.root_lo = lo.to_double(MPFR_RNDD);
  out.root_hi = hi.to_double(MPFR_RNDU);
  return out;
}

VerificationResult verify_petho(std::uint64_t samples, std::uint64_t seed) {
  detail::Recorder rec("petho", std::to_string(samples) + " seeded samples (seed " + std::to_string(seed) +
                                    "), h in [1,4], a > (e^2/h)^h, b >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto threshold_up = [](double h) {
    BigFloat t(kPethoBits);
    BigFloat hh = bf(h, kPethoBits);
    mpfr_set_ui(t.get(), 2, MPFR_RNDN);
    mpfr_exp(t.get(), t.get(), MPFR_RNDU);
    mpfr_div(t.get(), t.get(), hh.get(), MPFR_RNDU);
    mpfr_pow(t.get(), t.get(), hh.get(), MPFR_RNDU);
    return t;
  };
  auto lift_above = [&](double a, double h) {
    const BigFloat t = threshold_up(h);
    while (mpfr_cmp_d(t.get(), a) >= 0) a = std::nextafter(a, INFINITY);
    return a;
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    double h;
    double a;
    double b;
    if (i == 0) {
      h = 1.0;
      b = 0.0;
      a = lift_above(threshold_up(1.0).to_double(MPFR_RNDU), 1.0);
    } else {
      h = (i % 10 == 0) ? static_cast<double>(1 + (i / 10) % 4) : 1.0 + 3.0 * unit(rng);
      const double u = std::pow(10.0, -12.0 + 18.0 * unit(rng));
      a = lift_above(threshold_up(h).to_double(MPFR_RNDU) * (1.0 + u), h);
      b = (i % 5 == 0) ? 0.0 : std::pow(10.0, -6.0 + 18.0 * unit(rng));
    }
    const PethoOutcome o = petho_case(a, b, h);
    const std::string where = "a=" + fmt(a) + " b=" + fmt(b) + " h=" + fmt(h);
    const bool ok = o.certified && o.root_hi <= o.bound_down;
    const double margin = o.bound_down > 0 ? (o.bound_down - o.root_hi) / o.bound_down : 0.0;
    rec.record("largest root < 2^h(b^(1/h)+a^(1/h)log(h^h a))^h", "relative", ok, false, margin, where,
               o.certified ? "root not below bound" : "bound not certified");
  }
  return rec.finish();
}

// ---- log(1+z) ------------------------------------------------------------

Log1pOutcome log1p_case(double x, double y) {
  Log1pOutcome out;
  const BigFloat X = bf(x, kExactBits);
  const BigFloat Y = bf(y, kExactBits);
  BigFloat w(kExactBits);
  BigFloat t(kExactBits);
  mpfr_mul_2ui(w.get(), X.get(), 1, MPFR_RNDN);
  mpfr_sqr(t.get(), X.get(), MPFR_RNDN);
  mpfr_add(w.get(), w.get(), t.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), Y.get(), MPFR_RNDN);
  mpfr_add(w.get(), w.get(), t.get(), MPFR_RNDN);  // |1+z|^2 - 1, exact
  BigFloat u(kExactBits);
  mpfr_add_ui(u.get(), X.get(), 1, MPFR_RNDN);  // 1 + x, exact
  BigFloat ay(kExactBits);
  mpfr_abs(ay.get(), Y.get(), MPFR_RNDN);

  auto lhs = [&](mpfr_rnd_t rnd) {
    // |log(1+z)|^2 = (log1p(w)/2)^2 + atan(|y|/(1+x))^2
    BigFloat l_lo(kBits), l_hi(kBits), l2(kBits), arg(kBits), res(kBits);
    if (rnd == MPFR_RNDN) {
      mpfr_log1p(l_lo.get(), w.get(), MPFR_RNDN);
      mpfr_div_2ui(l_lo.get(), l_lo.get(), 1, MPFR_RNDN);
      mpfr_sqr(l2.get(), l_lo.get(), MPFR_RNDN);
      mpfr_div(arg.get(), ay.get(), u.get(), MPFR_RNDN);
      mpfr_atan(arg.get(), arg.get(), MPFR_RNDN);
    } else {
      mpfr_log1p(l_lo.get(), w.get(), MPFR_RNDD);
      mpfr_log1p(l_hi.get(), w.get(), MPFR_RNDU);
      mpfr_div_2ui(l_lo.get(), l_lo.get(), 1, MPFR_RNDD);
      mpfr_div_2ui(l_hi.get(), l_hi.get(), 1, MPFR_RNDU);
      mpfr_abs(l_lo.get(), l_lo.get(), MPFR_RNDU);
      mpfr_abs(l_hi.get(), l_hi.get(), MPFR_RNDU);
      mpfr_max(l2.get(), l_lo.get(), l_hi.get(), MPFR_RNDU);
      mpfr_sqr(l2.get(), l2.get(), MPFR_RNDU);
      mpfr_div(arg.get(), ay.get(), u.get(), MPFR_RNDU);
      mpfr_atan(arg.get(), arg.get(), MPFR_RNDU);
    }
    mpfr_sqr(arg.get(), arg.get(), rnd);
    mpfr_add(res.get(), l2.get(), arg.get(), rnd);
    mpfr_sqrt(res.get(), res.get(), rnd);
    return res;
  };
  auto rhs = [&](mpfr_rnd_t rnd) {
    BigFloat r(kBits), ln2(kBits);
    mpfr_hypot(r.get(), X.get(), Y.get(), rnd);
    mpfr_const_log2(ln2.get(), rnd);
    mpfr_mul(r.get(), r.get(), ln2.get(), rnd);
    mpfr_mul_2ui(r.get(), r.get(), 1, rnd);
    return r;
  };

  const BigFloat up = lhs(MPFR_RNDU);
  const BigFloat down = rhs(MPFR_RNDD);
  out.lhs_up = up.to_double(MPFR_RNDU);
  out.rhs_down = down.to_double(MPFR_RNDD);
  out.exact_identity = (x == 0.0 && y == 0.0) || (x == -0.5 && y == 0.0);
  const BigFloat ln_n = lhs(MPFR_RNDN);
  const BigFloat rhs_n = rhs(MPFR_RNDN);
  if (mpfr_zero_p(rhs_n.get()) == 0) {
    BigFloat gap(kBits);
    mpfr_sub(gap.get(), ln_n.get(), rhs_n.get(), MPFR_RNDN);
    mpfr_abs(gap.get(), gap.get(), MPFR_RNDN);
    // ulp(rhs) = 2^(exp - prec)
    mpfr_mul_2si(gap.get(), gap.get(), static_cast<long>(kBits) - mpfr_get_exp(rhs_n.get()), MPFR_RNDN);
    out.ulp_gap = gap.to_double();
  }
  out.holds = out.exact_identity || mpfr_cmp(up.get(), down.get()) <= 0;
  return out;
}

VerificationResult verify_log1p_bound(std::uint64_t samples, std::uint64_t seed) {
  detail::Recorder rec("log1p", std::to_string(samples) + " seeded samples of |z| <= 1/2 (seed " +
                                    std::to_string(seed) + "), boundary included");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<std::pair<double, double>> fixed = {
      {-0.5, 0.0}, {0.0, 0.0},  {0.5, 0.0},   {0.0, 0.5},        {0.0, -0.5},         {0.3, 0.4},
      {-0.3, 0.4}, {-0.3, -0.4}, {1e-300, 0.0}, {0.0, 1e-300}, {-0.5 + 0x1p-40, 0.0}, {-0.25, 0.0}};

  auto inside = [](double x, double y) {
    BigFloat s(kExactBits);
    BigFloat t(kExactBits);
    BigFloat X = bf(x, kExactBits);
    BigFloat Y = bf(y, kExactBits);
    mpfr_sqr(s.get(), X.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), Y.get(), MPFR_RNDN);
    mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDN);
    return mpfr_cmp_d(s.get(), 0.25) <= 0;
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    double x;
    double y;
    if (i < fixed.size()) {
      std::tie(x, y) = fixed[i];
    } else {
      const double r = (i % 10 == 0) ? 0.5 : 0.5 * std::sqrt(unit(rng));
      const double theta = 2.0 * M_PI * unit(rng);
      x = r * std::cos(theta);
      y = r * std::sin(theta);
      while (!inside(x, y)) {
        x *= 1.0 - 0x1p-52;
        y *= 1.0 - 0x1p-52;
      }
    }
    const Log1pOutcome o = log1p_case(x, y);
    rec.record("|log(1+z)| <= 2 log2 |z|", "absolute", o.holds, o.exact_identity, o.rhs_down - o.lhs_up,
               "z=" + fmt(x) + (y < 0 ? "" : "+") + fmt(y) + "i", "not certified");
  }
  return rec.finish();
}

}  // namespace modbound
