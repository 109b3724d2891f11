#pragma once

#include <cstdint>
#include <variant>

#include "modbound/logscale.hpp"

namespace modbound {

struct ArchimedeanPlace {};

struct NonArchimedeanPlace {
  std::uint64_t p = 2;
  long e = 1;  // ramification index
  long f = 1;  // residue degree
};

using PlaceKind = std::variant<ArchimedeanPlace, NonArchimedeanPlace>;

struct BakerParams {
  long n = 2;  // number of multiplicands, >= 2
  long d = 1;  // field degree
  PlaceKind place = ArchimedeanPlace{};
  int kappa = 2;  // 1 only when every alpha_i is real
};

// (log 6)^3 / 2 for d = 2, 4 (log d / log log d)^3 for d >= 3.
LogValue zeta_of_degree(long d, RoundingContext ctx = {});

struct MatveevBranches {
  LogValue explicit_branch;  // (1/kappa) (e n / 2)^kappa 30^(n+3) n^3.5
  LogValue power_branch;     // 2^(6n+20)
};
MatveevBranches matveev_branches(long n, int kappa, RoundingContext ctx = {});
LogValue matveev_C(long n, int kappa, RoundingContext ctx = {});

// (16 e d)^(2(n+1)) n^(5/2) log(2nd) log(2d) * e_p^n p^f / (f log p)^2
LogValue yu_C0(long n, long d, std::uint64_t p, long e, long f, RoundingContext ctx = {});
// (log p / e_p) * C0
LogValue yu_C1(long n, long d, std::uint64_t p, long e, long f, RoundingContext ctx = {});

// Archimedean: 2^(8n+29) d^(n+2) log(ed).
// Finite:      2^(10n+10) e^(2n+2) d^(3n+3) p^d.
LogValue baker_upsilon(const BakerParams& params, RoundingContext ctx = {});

struct UpsilonPair {
  LogValue full;   // 2^(13s+22) d^(3s+3) l^d
  LogValue tilde;  // full * d^(-s) = 2^(13s+22) d^(2s+3) l^d
};
UpsilonPair upsilon_tilde(long s, long d, long ell, RoundingContext ctx = {});

}  // namespace modbound
