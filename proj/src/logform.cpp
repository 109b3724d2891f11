#include "modbound/logform.hpp"

#include "modbound/errors.hpp"

namespace modbound {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

std::map<mpz_class, unsigned long> factor(mpz_class n) {
  std::map<mpz_class, unsigned long> out;
  for (unsigned long q = 2; q <= kTrialLimit && q * q <= n; ++q) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q) != 0) {
      ++out[mpz_class(q)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
    }
  }
  // A leftover without small factors stays as one basis element.
  if (n > 1) ++out[n];
  return out;
}

const Interval& cached_ln(const mpz_class& p, mpfr_prec_t bits) {
  thread_local std::map<std::pair<mpz_class, mpfr_prec_t>, Interval> cache;
  auto key = std::make_pair(p, bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Interval::ln_of_integer(p, bits)).first;
  return it->second;
}

}  // namespace

LogForm LogForm::constant(const mpq_class& c) {
  LogForm f;
  f.constant_ = c;
  return f;
}

LogForm LogForm::ln(const mpz_class& n) {
  if (n < 1) throw DomainError("LogForm::ln needs n >= 1");
  LogForm f;
  for (const auto& [p, k] : factor(n)) f.primes_[p] = k;
  return f;
}

LogForm LogForm::ln_of(const LogForm& inner) {
  LogForm f;
  f.atoms_["log(" + inner.key() + ")"] = Atom{1, std::make_shared<const LogForm>(inner)};
  return f;
}

LogForm LogForm::ln_pi() {
  LogForm f;
  f.atoms_["log(pi)"] = Atom{1, nullptr};
  return f;
}

void LogForm::add_scaled(const LogForm& other, const mpq_class& q) {
  constant_ += q * other.constant_;
  for (const auto& [p, c] : other.primes_) primes_[p] += q * c;
  for (const auto& [k, atom] : other.atoms_) {
    auto [it, inserted] = atoms_.try_emplace(k, Atom{0, atom.inner});
    it->second.weight += q * atom.weight;
  }
  prune();
}

void LogForm::prune() {
  std::erase_if(primes_, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(atoms_, [](const auto& kv) { return kv.second.weight == 0; });
}

LogForm& LogForm::operator+=(const LogForm& other) {
  add_scaled(other, 1);
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) {
  add_scaled(other, -1);
  return *this;
}

LogForm& LogForm::operator*=(const mpq_class& q) {
  LogForm scaled;
  scaled.add_scaled(*this, q);
  *this = std::move(scaled);
  return *this;
}

bool LogForm::is_zero() const { return constant_ == 0 && primes_.empty() && atoms_.empty(); }

Interval LogForm::evaluate(mpfr_prec_t bits) const {
  Interval total = Interval::exact(constant_, bits);
  for (const auto& [p, c] : primes_) total = total + c * cached_ln(p, bits);
  for (const auto& [k, atom] : atoms_) {
    if (!atom.inner) {
      total = total + atom.weight * iv_log(Interval::pi(bits));
      continue;
    }
    const Interval inner = atom.inner->evaluate(bits);
    if (!inner.certainly_positive()) throw DomainError("log of a form not certified positive: " + k);
    total = total + atom.weight * iv_log(inner);
  }
  return total;
}

std::string LogForm::key() const {
  std::string out = constant_.get_str();
  for (const auto& [p, c] : primes_) out += "+" + c.get_str() + "*log" + p.get_str();
  for (const auto& [k, atom] : atoms_) out += "+" + atom.weight.get_str() + "*" + k;
  return out;
}

LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
LogForm operator*(const mpq_class& q, LogForm a) { return a *= q; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Exact:
      return "exact";
    case Verdict::Violated:
      return "violated";
    case Verdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

Comparison compare_le(const LogForm& lhs, const LogForm& rhs, mpfr_prec_t bits) {
  const LogForm diff = rhs - lhs;
  if (diff.is_zero()) return {Verdict::Exact, 0.0};
  const Interval value = diff.evaluate(bits);
  const double margin = value.lo().to_double(MPFR_RNDD);
  if (value.certainly_nonnegative()) return {Verdict::Holds, margin};
  if (value.certainly_negative()) return {Verdict::Violated, margin};
  return {Verdict::Undecided, margin};
}

}  // namespace modbound
