#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace modbound::poly {

// Coefficient vectors are stored lowest degree first.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;
using FpPoly = std::vector<std::uint64_t>;

int degree(const ZPoly& f);
ZPoly derivative(const ZPoly& f);
mpz_class evaluate(const ZPoly& f, const mpz_class& x);

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
mpz_class resultant(const ZPoly& f, const ZPoly& g);
// |disc(f)| for monic f; equals |res(f, f')|.
mpz_class discriminant_abs(const ZPoly& f);

// Number of distinct real roots of a squarefree polynomial.
int count_real_roots(const ZPoly& f);
// Integer roots of a monic polynomial with non-zero discriminant.
std::vector<mpz_class> integer_roots(const ZPoly& f);

// n-th cyclotomic polynomial.
ZPoly cyclotomic(unsigned long n);

// Shape of f mod p: one (degree, multiplicity) pair per irreducible factor,
// sorted. f must be monic; p prime.
struct FactorShape {
  int degree;
  int multiplicity;
  auto operator<=>(const FactorShape&) const = default;
};
std::vector<FactorShape> factor_shape_mod_p(const ZPoly& f, std::uint64_t p);

}  // namespace modbound::poly
