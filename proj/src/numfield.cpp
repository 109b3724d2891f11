#include "modbound/numfield.hpp"

#include <algorithm>
#include <numeric>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if ((e & 1) != 0) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

mpz_class pow_of(std::uint64_t p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

void validate_shapes(std::uint64_t p, const std::vector<PlaceShape>& shapes, int degree) {
  if (!is_prime(p)) throw InvalidFieldError("splitting override given for non-prime " + std::to_string(p));
  int total = 0;
  for (const auto& s : shapes) {
    if (s.e < 1 || s.f < 1) throw InvalidFieldError("splitting override needs e, f >= 1");
    total += s.e * s.f;
  }
  if (total != degree) {
    throw InvalidFieldError("splitting override at p=" + std::to_string(p) + " has sum e*f = " +
                            std::to_string(total) + ", expected degree " + std::to_string(degree));
  }
}

std::vector<FinitePlace> places_from_shapes(std::uint64_t p, const std::vector<PlaceShape>& shapes) {
  std::vector<FinitePlace> out;
  for (const auto& s : shapes) out.push_back({p, s.f, s.e, pow_of(p, static_cast<unsigned long>(s.f)), false});
  return out;
}

bool is_squarefree_integer(long m) {
  unsigned long a = static_cast<unsigned long>(m < 0 ? -m : m);
  for (unsigned long q = 2; q * q <= a; ++q) {
    if (a % (q * q) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_totient: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

mpz_class cyclotomic_disc_abs(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic_disc_abs: n must be positive");
  const std::uint64_t phi = euler_totient(n);
  mpz_class value = pow_of(n, phi);
  for (std::uint64_t p : prime_divisors(n)) {
    mpz_class divisor = pow_of(p, phi / (p - 1));
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  }
  return value;
}

const char* to_string(SplitStatus status) {
  switch (status) {
    case SplitStatus::Dedekind:
      return "dedekind";
    case SplitStatus::Preset:
      return "preset";
    case SplitStatus::Override:
      return "override";
    case SplitStatus::Uncertain:
      return "uncertain";
  }
  return "unknown";
}

NumberField field_from_poly(const std::vector<mpz_class>& coeffs, const FieldOptions& options) {
  if (coeffs.size() < 2) throw InvalidFieldError("polynomial must have degree >= 1");
  if (coeffs.back() != 1) throw InvalidFieldError("polynomial must be monic (leading coefficient 1)");
  NumberField field;
  field.name = "poly";
  field.min_poly = coeffs;
  field.degree = static_cast<int>(coeffs.size()) - 1;
  const int d = field.degree;

  const mpz_class disc = poly::discriminant_abs(coeffs);
  if (disc == 0) throw InvalidFieldError("polynomial is not squarefree (zero discriminant)");
  if (d >= 2 && !poly::integer_roots(coeffs).empty()) {
    throw InvalidFieldError("polynomial is reducible over Q (it has an integer root)");
  }
  if (d >= 4 && !options.assert_irreducible) {
    throw InvalidFieldError("irreducibility is not checked above degree 3; set assert_irreducible");
  }

  field.r1 = poly::count_real_roots(coeffs);
  field.r2 = (d - field.r1) / 2;
  field.disc_abs = disc;
  field.omega_bound = 2L * d * d;

  if (options.exact_disc) {
    const mpz_class& D = *options.exact_disc;
    if (D <= 0 || disc % D != 0) {
      throw InvalidFieldError("exact_disc must be a positive divisor of |disc(min_poly)|");
    }
    if (mpz_perfect_square_p(mpz_class(disc / D).get_mpz_t()) == 0) {
      throw InvalidFieldError("|disc(min_poly)| / exact_disc must be a perfect square (the index squared)");
    }
    field.disc_abs = D;
    field.disc_is_exact = true;
  }
  if (options.exact_omega) {
    const long w = *options.exact_omega;
    if (w < 2 || w % 2 != 0 || w > 2L * d * d) {
      throw InvalidFieldError("exact_omega must be even and lie in [2, 2d^2]");
    }
    if (static_cast<long>(euler_totient(static_cast<std::uint64_t>(w))) > d ||
        d % static_cast<long>(euler_totient(static_cast<std::uint64_t>(w))) != 0) {
      throw InvalidFieldError("exact_omega incompatible with the degree: phi(omega) must divide d");
    }
    if (field.r1 > 0 && w != 2) throw InvalidFieldError("a field with a real embedding has exactly 2 roots of unity");
    field.omega_bound = w;
    field.omega_is_exact = true;
  }
  for (const auto& [p, shapes] : options.splitting_overrides) {
    validate_shapes(p, shapes, d);
    field.splitting_overrides[p] = shapes;
  }
  return field;
}

NumberField field_preset(const std::string& name, std::optional<long> parameter) {
  auto exact = [](NumberField f, const std::string& label, long omega) {
    f.name = label;
    f.disc_is_exact = true;
    f.omega_bound = omega;
    f.omega_is_exact = true;
    return f;
  };
  if (name == "Q" || name == "rationals") {
    NumberField f = field_from_poly({0, 1});
    f.order_is_maximal = true;
    return exact(f, "Q", 2);
  }
  if (name == "gaussian") {
    NumberField f = field_from_poly({1, 0, 1});
    f.order_is_maximal = true;
    return exact(f, "gaussian", 4);
  }
  if (name == "eisenstein") {
    NumberField f = field_from_poly({1, 1, 1});
    f.order_is_maximal = true;
    return exact(f, "eisenstein", 6);
  }
  if (name == "quadratic") {
    if (!parameter) throw UsageError("preset 'quadratic' needs a squarefree parameter m");
    const long m = *parameter;
    if (m == 0 || m == 1 || !is_squarefree_integer(m)) {
      throw UsageError("preset 'quadratic' needs squarefree m not in {0, 1}");
    }
    NumberField f = field_from_poly({-m, 0, 1});
    const long m4 = ((m % 4) + 4) % 4;
    const long abs_m = m < 0 ? -m : m;
    f.disc_abs = m4 == 1 ? mpz_class(abs_m) : mpz_class(4 * abs_m);
    f.order_is_maximal = m4 != 1;
    if (m4 == 1) {
      const long m8 = ((m % 8) + 8) % 8;
      f.splitting_overrides[2] =
          m8 == 1 ? std::vector<PlaceShape>{{1, 1}, {1, 1}} : std::vector<PlaceShape>{{1, 2}};
    }
    const long omega = m == -1 ? 4 : (m == -3 ? 6 : 2);
    return exact(f, "quadratic:" + std::to_string(m), omega);
  }
  if (name == "cyclotomic") {
    if (!parameter || *parameter < 3) throw UsageError("preset 'cyclotomic' needs N >= 3");
    const auto n = static_cast<std::uint64_t>(*parameter);
    const poly::ZPoly phi_poly = poly::cyclotomic(n);
    NumberField f;
    f.min_poly = phi_poly;
    f.degree = poly::degree(phi_poly);
    f.r1 = 0;
    f.r2 = f.degree / 2;
    f.disc_abs = cyclotomic_disc_abs(n);
    f.order_is_maximal = true;
    return exact(f, "cyclotomic:" + std::to_string(n), static_cast<long>(n % 2 == 0 ? n : 2 * n));
  }
  throw UsageError("unknown field preset '" + name + "'");
}

SplitResult split_prime(const NumberField& field, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("split_prime: " + std::to_string(p) + " is not prime");
  SplitResult result;
  const mpz_class poly_disc = poly::discriminant_abs(field.min_poly);
  const mpz_class p2 = pow_of(p, 2);
  result.index_divisor_suspected = poly_disc % p2 == 0;

  if (auto it = field.splitting_overrides.find(p); it != field.splitting_overrides.end()) {
    result.places = places_from_shapes(p, it->second);
    result.status = SplitStatus::Override;
    return result;
  }

  std::vector<PlaceShape> shapes;
  for (const auto& s : poly::factor_shape_mod_p(field.min_poly, p)) shapes.push_back({s.multiplicity, s.degree});
  auto places = places_from_shapes(p, shapes);

  if (!result.index_divisor_suspected) {
    result.places = std::move(places);
    result.status = SplitStatus::Dedekind;
    return result;
  }
  result.places = std::move(places);
  if (field.order_is_maximal) {
    result.status = SplitStatus::Preset;
    return result;
  }
  if (field.disc_is_exact) {
    // index^2 = disc(min_poly) / D; Dedekind-Kummer applies when p does not divide the index.
    const mpz_class index_sq = poly_disc / field.disc_abs;
    if (index_sq % p != 0) {
      result.status = SplitStatus::Dedekind;
      return result;
    }
  }
  result.status = SplitStatus::Uncertain;
  return result;
}

long omega_upper(const NumberField& field) {
  return field.omega_is_exact ? field.omega_bound : 2L * field.degree * field.degree;
}

}  // namespace modbound
