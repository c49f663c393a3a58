#pragma once
// Exact rational simplex (two phases, Bland's rule).

#include "hilbstab/polyring.hpp"

namespace hs {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::vector<Rational> x;
  Rational value = 0;
  // optimal: dual multipliers. infeasible: Farkas ray with y.A <= 0 and y.b > 0.
  std::vector<Rational> y;
};

// minimize c.x subject to A x = b, x >= 0
LPResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace hs
