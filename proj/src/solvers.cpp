#include "sparsecert/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "parallel_util.hpp"
#include "sparsecert/combinatorics.hpp"
#include "sparsecert/errors.hpp"
#include "sparsecert/lp.hpp"

namespace sparsecert {

namespace {

void validate_support(const std::vector<int>& support, int count) {
    int prev = -1;
    for (int idx : support) {
        if (idx <= prev || idx >= count)
            throw std::invalid_argument("support must be strictly increasing within range");
        prev = idx;
    }
}

Matrix restrict_columns(const Matrix& t, const std::vector<int>& support) {
    Matrix sub(t.rows, static_cast<int>(support.size()));
    for (int i = 0; i < t.rows; ++i)
        for (std::size_t s = 0; s < support.size(); ++s) sub.at(i, static_cast<int>(s)) = t.at(i, support[s]);
    return sub;
}

SparseSolution describe(const Matrix& t, const Vector& x, Vector coefficients) {
    SparseSolution sol;
    sol.coefficients = std::move(coefficients);
    for (int j = 0; j < static_cast<int>(sol.coefficients.size()); ++j)
        if (std::abs(sol.coefficients[j]) > kSupportTau) sol.support.push_back(j);
    sol.l0 = static_cast<int>(sol.support.size());
    sol.l1 = norm_l1(sol.coefficients);
    Vector res = matvec(t, sol.coefficients);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= x[i];
    sol.residual = norm_linf(res);
    return sol;
}

}  // namespace

std::optional<Vector> solve_on_support(const Matrix& t, const std::vector<int>& support,
                                       const Vector& x, double tol) {
    if (static_cast<int>(x.size()) != t.rows)
        throw std::invalid_argument("solve_on_support: x length mismatch");
    validate_support(support, t.cols);
    if (support.empty()) {
        if (norm_linf(x) > tol) return std::nullopt;
        return Vector(t.cols, 0.0);
    }
    const Matrix sub = restrict_columns(t, support);
    const auto packed = solve_consistent(sub, x, tol);
    if (!packed) return std::nullopt;
    Vector d(t.cols, 0.0);
    for (std::size_t s = 0; s < support.size(); ++s) d[support[s]] = (*packed)[s];
    return d;
}

namespace {

// Feasible same-cardinality vector distinct from the incumbent; an incumbent
// reproduced on a rank-deficient support still yields a competitor by adding
// a restricted kernel direction.
std::optional<Vector> competitor_on_support(const Matrix& t, const std::vector<int>& support,
                                            const Vector& x, const Vector& incumbent, double tol) {
    const auto candidate = solve_on_support(t, support, x, tol);
    if (!candidate) return std::nullopt;
    double dist = 0.0;
    for (std::size_t j = 0; j < candidate->size(); ++j)
        dist = std::max(dist, std::abs((*candidate)[j] - incumbent[j]));
    if (dist > kDistinctTol) return candidate;

    const Matrix sub = restrict_columns(t, support);
    const Matrix kb = kernel_basis(sub, kDefaultTol);
    if (kb.cols == 0) return std::nullopt;
    Vector z = kb.col(0);
    const double scale = max_abs(z);
    Vector alt = *candidate;
    for (std::size_t s = 0; s < support.size(); ++s) alt[support[s]] += z[s] / scale;
    return alt;
}

}  // namespace

std::optional<SparseSolution> solve_l0(const Matrix& t, const Vector& x, int max_k, double tol,
                                       Execution exec) {
    const int n = t.cols;
    if (static_cast<int>(x.size()) != t.rows) throw std::invalid_argument("solve_l0: x length mismatch");
    if (max_k < 0 || max_k > n) throw std::invalid_argument("solve_l0: need 0 <= max_k <= count");

    for (int card = 0; card <= max_k; ++card) {
        const std::uint64_t total = binomial(n, card);
        std::uint64_t found = UINT64_MAX;

#ifdef _OPENMP
        if (exec == Execution::parallel && total > 1) {
            detail::FirstError first_error;
#pragma omp parallel
            {
                std::uint64_t local = UINT64_MAX;
#pragma omp for schedule(dynamic, 64)
                for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
                    try {
                        const auto sup = combination_from_rank(static_cast<std::uint64_t>(r), n, card);
                        if (solve_on_support(t, sup, x, tol))
                            local = std::min(local, static_cast<std::uint64_t>(r));
                    } catch (...) {
                        first_error.capture(static_cast<std::uint64_t>(r));
                    }
                }
#pragma omp critical(sparsecert_l0_merge)
                found = std::min(found, local);
            }
            first_error.rethrow_if_any();
        } else
#endif
        {
            std::vector<int> sup = first_combination(card);
            std::uint64_t rank = 0;
            for (bool more = true; more; more = next_combination(sup, n), ++rank) {
                if (solve_on_support(t, sup, x, tol)) {
                    found = rank;
                    break;
                }
            }
        }
        if (found == UINT64_MAX) continue;

        const std::vector<int> winner = combination_from_rank(found, n, card);
        const Vector d = *solve_on_support(t, winner, x, tol);
        SparseSolution sol = describe(t, x, d);

        // uniqueness: a sparser representation cannot exist, so only the
        // remaining supports of the same cardinality can hide a competitor
        std::optional<Vector> competitor = competitor_on_support(t, winner, x, d, tol);
        if (!competitor) {
            std::uint64_t comp_rank = UINT64_MAX;
#ifdef _OPENMP
            if (exec == Execution::parallel && total - found > 2) {
                detail::FirstError first_error;
#pragma omp parallel
                {
                    std::uint64_t local = UINT64_MAX;
#pragma omp for schedule(dynamic, 64)
                    for (std::int64_t r = static_cast<std::int64_t>(found) + 1;
                         r < static_cast<std::int64_t>(total); ++r) {
                        try {
                            const auto sup = combination_from_rank(static_cast<std::uint64_t>(r), n, card);
                            if (competitor_on_support(t, sup, x, d, tol))
                                local = std::min(local, static_cast<std::uint64_t>(r));
                        } catch (...) {
                            first_error.capture(static_cast<std::uint64_t>(r));
                        }
                    }
#pragma omp critical(sparsecert_l0_comp_merge)
                    comp_rank = std::min(comp_rank, local);
                }
                first_error.rethrow_if_any();
            } else
#endif
            {
                for (std::uint64_t r = found + 1; r < total; ++r) {
                    const auto sup = combination_from_rank(r, n, card);
                    if (competitor_on_support(t, sup, x, d, tol)) {
                        comp_rank = r;
                        break;
                    }
                }
            }
            if (comp_rank != UINT64_MAX)
                competitor = competitor_on_support(t, combination_from_rank(comp_rank, n, card), x, d, tol);
        }

        if (competitor) {
            sol.unique = Uniqueness::no;
            sol.competitor = std::move(*competitor);
        } else {
            sol.unique = Uniqueness::yes;
        }
        return sol;
    }
    return std::nullopt;
}

SparseSolution solve_l1(const Matrix& t, const Vector& x, double tol) {
    const int n = t.cols;
    if (static_cast<int>(x.size()) != t.rows) throw std::invalid_argument("solve_l1: x length mismatch");

    // splitting LP: d = u - v, minimize sum(u) + sum(v) subject to T u - T v = x
    LinearProgram prog;
    prog.objective.assign(2 * n, 1.0);
    prog.constraints = Matrix(t.rows, 2 * n);
    for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < n; ++j) {
            prog.constraints.at(i, j) = t.at(i, j);
            prog.constraints.at(i, n + j) = -t.at(i, j);
        }
    }
    prog.rhs = x;

    const LpOutcome base = solve_lp(prog, tol);
    if (base.status == LpStatus::infeasible)
        throw InfeasibleError("solve_l1: x lies outside the column span of T");
    if (base.status != LpStatus::optimal)
        throw Error("solve_l1: splitting LP cannot be unbounded");

    Vector d(n, 0.0);
    for (int j = 0; j < n; ++j) d[j] = base.solution[j] - base.solution[n + j];
    SparseSolution sol = describe(t, x, d);

    // perturbation probes: penalize each splitting coordinate in turn; a
    // second optimum at a different vertex flags non-uniqueness
    sol.unique = Uniqueness::yes;
    constexpr double kProbeEps = 1e-7;
    for (int probe = 0; probe < 2 * n; ++probe) {
        LinearProgram probed = prog;
        probed.objective[probe] += kProbeEps;
        const LpOutcome alt = solve_lp(probed, tol);
        if (alt.status != LpStatus::optimal) continue;
        Vector d_alt(n, 0.0);
        for (int j = 0; j < n; ++j) d_alt[j] = alt.solution[j] - alt.solution[n + j];
        if (std::abs(norm_l1(d_alt) - sol.l1) > 1e-6) continue;
        double dist = 0.0;
        for (int j = 0; j < n; ++j) dist = std::max(dist, std::abs(d_alt[j] - d[j]));
        if (dist > kDistinctTol) {
            sol.unique = Uniqueness::no;
            sol.competitor = std::move(d_alt);
            break;
        }
    }
    return sol;
}

}  // namespace sparsecert
