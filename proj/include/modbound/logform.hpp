#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>

#include "modbound/interval.hpp"

namespace modbound {

// A real number written as
//   c + sum_p q_p log p + sum_k w_k log(F_k)
// with rational c, q_p, w_k and nested forms F_k. Logs of integers are
// split into prime logs, so identical expressions cancel exactly when two
// forms are subtracted.
class LogForm {
 public:
  LogForm() = default;
  static LogForm constant(const mpq_class& c);
  static LogForm ln(const mpz_class& n);  // n >= 1
  static LogForm ln(long n) { return ln(mpz_class(n)); }
  static LogForm ln_of(const LogForm& inner);  // inner must be positive
  static LogForm ln_pi();

  LogForm& operator+=(const LogForm& other);
  LogForm& operator-=(const LogForm& other);
  LogForm& operator*=(const mpq_class& q);

  bool is_zero() const;
  Interval evaluate(mpfr_prec_t bits) const;
  std::string key() const;

 private:
  struct Atom {
    mpq_class weight;
    std::shared_ptr<const LogForm> inner;  // null for log(pi)
  };
  void add_scaled(const LogForm& other, const mpq_class& q);
  void prune();

  mpq_class constant_ = 0;
  std::map<mpz_class, mpq_class> primes_;
  std::map<std::string, Atom> atoms_;
};

LogForm operator+(LogForm a, const LogForm& b);
LogForm operator-(LogForm a, const LogForm& b);
LogForm operator*(const mpq_class& q, LogForm a);
inline LogForm operator*(long q, LogForm a) { return mpq_class(q) * std::move(a); }

enum class Verdict { Holds, Exact, Violated, Undecided };
const char* to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Undecided;
  double margin = 0.0;  // certified lower bound of rhs - lhs, rounded down to double
  bool ok() const { return verdict == Verdict::Holds || verdict == Verdict::Exact; }
};

// Decides lhs <= rhs: exact when rhs - lhs is the zero form, otherwise by
// evaluating the difference with interval arithmetic.
Comparison compare_le(const LogForm& lhs, const LogForm& rhs, mpfr_prec_t bits = 256);

}  // namespace modbound
