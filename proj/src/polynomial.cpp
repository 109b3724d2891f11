#include "modbound/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace modbound::poly {

namespace {

template <class Poly>
void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int qdegree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly to_q(const ZPoly& f) { return QPoly(f.begin(), f.end()); }

// Remainder of a by b over Q (b non-zero).
QPoly qrem(QPoly a, const QPoly& b) {
  trim(a);
  const int db = qdegree(b);
  while (qdegree(a) >= db && !a.empty()) {
    const int shift = qdegree(a) - db;
    const mpq_class factor = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

int sign_at(const QPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

std::vector<QPoly> sturm_sequence(const ZPoly& f) {
  std::vector<QPoly> seq;
  seq.push_back(to_q(f));
  seq.push_back(to_q(derivative(f)));
  trim(seq[1]);
  while (!seq.back().empty() && qdegree(seq.back()) > 0) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<QPoly>& seq, const mpq_class& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign_at(p, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<QPoly>& seq, bool negative) {
  std::vector<int> signs;
  for (const auto& p : seq) {
    if (p.empty()) continue;
    int s = sgn(p.back());
    if (negative && qdegree(p) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

// ---- F_p arithmetic -------------------------------------------------------

struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    while (e != 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  int deg(const FpPoly& f) const { return static_cast<int>(f.size()) - 1; }

  FpPoly monic(FpPoly f) const {
    trim(f);
    if (f.empty()) return f;
    const std::uint64_t lead_inv = inv(f.back());
    for (auto& c : f) c = mul(c, lead_inv);
    return f;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  // Returns (quotient, remainder); b non-zero.
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    trim(a);
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    FpPoly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
    const std::uint64_t lead_inv = inv(b.back());
    while (!a.empty() && deg(a) >= db) {
      const int shift = deg(a) - db;
      const std::uint64_t factor = mul(a.back(), lead_inv);
      q[static_cast<std::size_t>(shift)] = factor;
      for (int i = 0; i <= db; ++i) {
        a[static_cast<std::size_t>(shift + i)] = sub(a[static_cast<std::size_t>(shift + i)], mul(factor, b[static_cast<std::size_t>(i)]));
      }
      trim(a);
    }
    trim(q);
    return {q, a};
  }

  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly quo(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).first; }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  FpPoly derivative(const FpPoly& f) const {
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p));
    trim(d);
    return d;
  }

  FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& modulus) const {
    FpPoly result{1 % p};
    base = rem(base, modulus);
    while (e != 0) {
      if ((e & 1) != 0) result = rem(mul(result, base), modulus);
      base = rem(mul(base, base), modulus);
      e >>= 1;
    }
    return result;
  }

  bool is_one(const FpPoly& f) const { return f.size() == 1 && f[0] == 1; }
};

// Squarefree decomposition over F_p: list of (squarefree factor, multiplicity).
void squarefree_parts(const Fp& fp, FpPoly f, int scale, std::vector<std::pair<FpPoly, int>>& out) {
  f = fp.monic(std::move(f));
  if (fp.deg(f) <= 0) return;
  FpPoly c = fp.gcd(f, fp.derivative(f));
  FpPoly w = fp.quo(f, c);
  int i = 1;
  while (fp.deg(w) > 0) {
    FpPoly y = fp.gcd(w, c);
    FpPoly factor = fp.monic(fp.quo(w, y));
    if (fp.deg(factor) > 0) out.emplace_back(factor, i * scale);
    w = y;
    c = fp.monic(fp.quo(c, y));
    ++i;
  }
  if (fp.deg(c) > 0) {
    // c is a p-th power: take the p-th root coefficientwise.
    FpPoly root;
    for (std::size_t k = 0; k < c.size(); k += fp.p) root.push_back(c[k]);
    squarefree_parts(fp, root, scale * static_cast<int>(fp.p), out);
  }
}

}  // namespace

int degree(const ZPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

mpz_class evaluate(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class resultant(const ZPoly& f_in, const ZPoly& g_in) {
  ZPoly f = f_in;
  ZPoly g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const int m = degree(f);
  const int n = degree(g);
  const int size = m + n;
  if (size == 0) return 1;
  // Sylvester matrix, coefficients highest degree first.
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(size), std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) a[r][r + k] = f[static_cast<std::size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g[static_cast<std::size_t>(n - k)];
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class det = a[size - 1][size - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

mpz_class discriminant_abs(const ZPoly& f) { return abs(resultant(f, derivative(f))); }

int count_real_roots(const ZPoly& f) {
  if (degree(f) <= 0) return 0;
  const auto seq = sturm_sequence(f);
  return variations_at_infinity(seq, true) - variations_at_infinity(seq, false);
}

std::vector<mpz_class> integer_roots(const ZPoly& f) {
  std::vector<mpz_class> roots;
  const int d = degree(f);
  if (d <= 0) return roots;
  if (d == 1) {
    roots.push_back(-f[0] / f[1]);
    return roots;
  }
  const auto seq = sturm_sequence(f);
  mpz_class bound = 1;
  for (int i = 0; i < d; ++i) bound = std::max(bound, mpz_class(abs(f[static_cast<std::size_t>(i)])));
  bound += 1;
  // Endpoints are half-integers, never roots of a monic integer polynomial.
  struct Span {
    mpz_class lo, hi;  // interval (lo - 1/2, hi + 1/2]
  };
  std::vector<Span> stack{{-bound, bound}};
  auto count_in = [&](const mpz_class& lo, const mpz_class& hi) {
    const mpq_class a(2 * lo - 1, 2);
    const mpq_class b(2 * hi + 1, 2);
    return variations_at(seq, a) - variations_at(seq, b);
  };
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    if (count_in(s.lo, s.hi) == 0) continue;
    if (s.lo == s.hi) {
      if (evaluate(f, s.lo) == 0) roots.push_back(s.lo);
      continue;
    }
    mpz_class mid = s.lo + (s.hi - s.lo) / 2;
    stack.push_back({mid + 1, s.hi});
    stack.push_back({s.lo, mid});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ZPoly cyclotomic(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  auto mobius = [](unsigned long m) {
    int mu = 1;
    for (unsigned long q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  // Phi_n = prod over d | n of (x^d - 1)^mu(n/d).
  ZPoly num{1};
  std::vector<unsigned long> divide_by;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    if (mu < 0) {
      divide_by.push_back(d);
      continue;
    }
    ZPoly next(num.size() + d, 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] -= num[i];
      next[i + d] += num[i];
    }
    num = std::move(next);
  }
  for (unsigned long d : divide_by) {
    // Exact division by x^d - 1, from the top coefficient down.
    ZPoly q(num.size() - d, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = num[k + d];
      num[k] += q[k];
    }
    num = std::move(q);
  }
  return num;
}

std::vector<FactorShape> factor_shape_mod_p(const ZPoly& f, std::uint64_t p) {
  const Fp fp{p};
  FpPoly g;
  for (const auto& c : f) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    g.push_back(r.get_ui());
  }
  std::vector<std::pair<FpPoly, int>> parts;
  squarefree_parts(fp, g, 1, parts);
  std::vector<FactorShape> shape;
  for (auto& [part, mult] : parts) {
    // Distinct-degree factorization: only the factor degrees are needed.
    FpPoly rest = part;
    FpPoly h{0, 1};
    h = fp.rem(h, rest);
    for (int i = 1; fp.deg(rest) >= 2 * i; ++i) {
      h = fp.powmod(h, p, rest);
      FpPoly diff = h;
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = fp.sub(diff[1], 1);
      FpPoly common = fp.gcd(rest, diff);
      if (fp.deg(common) > 0) {
        for (int k = 0; k < fp.deg(common) / i; ++k) shape.push_back({i, mult});
        rest = fp.monic(fp.quo(rest, common));
        h = fp.rem(h, rest);
      }
    }
    if (fp.deg(rest) > 0) shape.push_back({fp.deg(rest), mult});
  }
  std::sort(shape.begin(), shape.end());
  return shape;
}

}  // namespace modbound::poly
