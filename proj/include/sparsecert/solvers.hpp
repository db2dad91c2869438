#pragma once

#include <optional>
#include <vector>

#include "sparsecert/execution.hpp"
#include "sparsecert/matcore.hpp"

namespace sparsecert {

// Zero threshold for support extraction: above LP feasibility noise, far
// below planted-coefficient magnitudes.
inline constexpr double kSupportTau = 1e-8;

// Two feasible coefficient vectors count as distinct above this inf-distance.
inline constexpr double kDistinctTol = 1e-6;

enum class Uniqueness { yes, no, not_checked };

struct SparseSolution {
    Vector coefficients;
    std::vector<int> support;     // indices with |coefficient| > kSupportTau
    int l0 = 0;
    double l1 = 0.0;
    double residual = 0.0;        // inf-norm of T*coefficients - x
    Uniqueness unique = Uniqueness::not_checked;
    std::optional<Vector> competitor;  // distinct feasible witness when unique == no
};

// Coefficients confined to the sorted index set M: any d supported on M with
// ||T d - x||_inf <= tol, or nullopt when the restricted system is
// inconsistent. Unique when the restricted columns are independent; free
// coordinates are set to zero otherwise.
std::optional<Vector> solve_on_support(const Matrix& t, const std::vector<int>& support,
                                       const Vector& x, double tol = kDefaultTol);

// Exhaustive l0 minimization: supports enumerated by cardinality 0..max_k,
// lexicographic within a cardinality. Returns the first-cardinality solution,
// then scans the remaining same-cardinality supports for a distinct feasible
// competitor to settle uniqueness. nullopt when no support of size <= max_k
// is feasible.
std::optional<SparseSolution> solve_l0(const Matrix& t, const Vector& x, int max_k,
                                       double tol = kDefaultTol,
                                       Execution exec = Execution::parallel);

// Basis pursuit via the splitting LP d = u - v. Uniqueness is decided by
// perturbation probes: each splitting coordinate is penalized by 1e-7 in
// turn, and an alternative optimum with equal l1 (within 1e-6) at
// inf-distance > 1e-6 flags non-uniqueness. Throws InfeasibleError when x is
// outside the column span.
SparseSolution solve_l1(const Matrix& t, const Vector& x, double tol = kDefaultTol);

}  // namespace sparsecert
