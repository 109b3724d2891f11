#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace modbound {

// Owning RAII handle for an mpfr_t. Arithmetic goes through the raw MPFR
// API so that every call site states its rounding mode explicitly.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  // Scientific notation with `digits` significant digits, rounded by `rnd`.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, (rnd == MPFR_RNDU)   ? "%.*RUe"
                        : (rnd == MPFR_RNDD) ? "%.*RDe"
                                             : "%.*RNe",
                  digits - 1, value_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  }

  int sign() const { return mpfr_sgn(value_); }

 private:
  mpfr_t value_;
};

}  // namespace modbound
