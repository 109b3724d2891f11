#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "modbound/logscale.hpp"
#include "modbound/numfield.hpp"

namespace modbound {

struct SRegulatorReport {
  double lower_const = 0.1;  // R_S(K) >= 0.1 for every K and S
  std::optional<LogValue> upper_via_hR;
  LogValue upper_via_siegel;
  LogValue finite_log_product;  // prod over finite places of log N(v)

  // The smaller of the available upper bounds.
  const LogValue& best_upper() const;
};

// prod log N(v); an empty product is 1.
LogValue finite_log_product(const std::vector<FinitePlace>& places, RoundingContext ctx = {});

// Siegel: (omega/2) (2/pi)^r2 (e log|D| / (4(d-1)))^(d-1) sqrt|D| * P.
// With hR supplied the bound h R P is reported as well. For d = 1 the
// middle factor is 1.
SRegulatorReport sregulator_bounds(const NumberField& field, const std::vector<FinitePlace>& places,
                                   const std::optional<mpq_class>& hR = std::nullopt, RoundingContext ctx = {});

}  // namespace modbound
