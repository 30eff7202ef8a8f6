#pragma once

#include <vector>

#include "statel/typespace.hpp"

namespace statel {

enum class LpStatus { Infeasible, Feasible, Optimal, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> point;  // per declared variable; Feasible/Optimal
    Rational value;               // objective value; Optimal only
    std::vector<Rational> ray;    // direction of unboundedness; Unbounded only
};

// Exact-rational phase-1 simplex with Bland's anti-cycling rule.  Variables
// are nonnegative unless declared free.  Returned points satisfy every row
// exactly.  Throws CapacityExceeded past limits.max_pivots.
LpOutcome lp_feasible(const LinearSystem& sys, const Limits& limits = {});

// Phase-1 + phase-2 simplex; requires sys.objective.
LpOutcome lp_optimize(const LinearSystem& sys, const Limits& limits = {});

// Scales a rational solution to an integral one by the LCM of the
// denominators.  Valid because every admissible row class survives scaling
// by an integer λ >= 1 (Homogeneous exactly, ScaleRobustGe/Le a fortiori);
// throws ScaleClassViolation when a row has no admissible class.  The
// result is re-verified against every row.
std::vector<mpz_class> integerize(const std::vector<Rational>& point, const LinearSystem& sys);

}  // namespace statel
