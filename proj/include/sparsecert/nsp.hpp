#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sparsecert/execution.hpp"
#include "sparsecert/matcore.hpp"

namespace sparsecert {

// Strictness for the NSP verdict: holds requires worst_ratio < 1/2 - this.
inline constexpr double kNspDecisionTol = 1e-9;

// Support enumeration bound for nsp_check.
inline constexpr std::uint64_t kNspEnumerationGuard = 2'000'000;

struct NspReport {
    int order = 0;
    bool holds = false;
    double worst_ratio = 0.0;
    std::vector<int> worst_support;
    std::optional<Vector> witness;   // null vector at l1-norm 1 achieving worst_ratio
    double strictness_margin = 0.0;  // 1/2 - worst_ratio
};

// Columns form a basis of {d : T d = 0} at tolerance tol; empty for injective T.
Matrix null_space_basis(const Matrix& t, double tol = kDefaultTol);

// Tight constant sup ||d_M||_1 / ||d||_1 over nonzero null vectors, with a
// maximizer scaled to ||d||_1 = 1 (zero vector when the ratio is zero).
// One LP per sign pattern on M, half elided by symmetry; ScaleGuardError when
// |M| > 20.
std::pair<double, Vector> nsp_support_ratio(const Matrix& t, const std::vector<int>& support,
                                            double tol = kDefaultTol);

// NSP of order k decided over all supports of size exactly k; the l1 mass of
// d_M is monotone under support enlargement, so the worst ratio over sizes
// <= k is attained at size k. ScaleGuardError when C(count, k) exceeds the
// enumeration guard.
NspReport nsp_check(const Matrix& t, int order, double tol = kDefaultTol,
                    Execution exec = Execution::parallel);

// The counterexample construction: c = d_M, x = T c, competitor = -d_{M^c}.
// Both represent x; when ||d_M||_1 >= ||d||_1 / 2 the competitor's l1 norm is
// at most that of c, refuting unique l1 recovery of c.
struct KernelCounterexample {
    Vector c;
    Vector x;
    Vector competitor;
};
KernelCounterexample counterexample_from_witness(const Matrix& t, const std::vector<int>& support,
                                                 const Vector& d, double tol = kDefaultTol);

}  // namespace sparsecert
