#pragma once

// Dense exact simplex over Q, for the small programs behind gauge and
// membership oracles.

#include <vector>

#include "toric/numeric_lattice.hpp"

namespace toric {

/// minimize cost·x subject to constraints·x == rhs, x >= 0.
struct LinearProgram {
  RationalMatrix constraints;
  RationalPoint rhs;
  RationalPoint cost;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RationalPoint x;
};

/// Two-phase simplex with Bland's rule (terminates on degenerate input).
LpSolution solve(const LinearProgram& lp);

}  // namespace toric
