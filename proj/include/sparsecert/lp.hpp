#pragma once

#include "sparsecert/matcore.hpp"

namespace sparsecert {

// Standard form: minimize objective . y subject to constraints y = rhs, y >= 0.
struct LinearProgram {
    Vector objective;
    Matrix constraints;
    Vector rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Vector solution;              // length v when optimal, empty otherwise
    double objective_value = 0.0;
    int iterations = 0;
};

// Two-phase dense-tableau simplex with Bland's rule. Phase 1 minimizes the
// artificial-variable sum and declares infeasibility when its optimum exceeds
// tol. Deterministic for fixed input. Throws IterationLimit past 50*(m+v)
// pivots.
LpOutcome solve_lp(const LinearProgram& prog, double tol = kDefaultTol);

// Brute-force oracle: enumerates basic solutions for the optimum and
// nullity-one nonnegative kernel supports for unboundedness. Guarded to
// v <= 12, m <= 8 (ScaleGuardError beyond).
LpOutcome lp_oracle_enumerate(const LinearProgram& prog);

}  // namespace sparsecert
