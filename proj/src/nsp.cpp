#include "sparsecert/nsp.hpp"

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

}  // namespace

Matrix null_space_basis(const Matrix& t, double tol) {
    return kernel_basis(t, tol);
}

std::pair<double, Vector> nsp_support_ratio(const Matrix& t, const std::vector<int>& support,
                                            double tol) {
    const int n = t.cols;
    const int dim = t.rows;
    validate_support(support, n);
    if (support.empty()) throw std::invalid_argument("nsp_support_ratio: support must be nonempty");
    const int ms = static_cast<int>(support.size());
    if (ms > 20) throw ScaleGuardError("nsp_support_ratio: sign enumeration bound is 20 indices");

    // Shared constraint block for every sign pattern:
    //   T u - T v = 0,  sum(u) + sum(v) + s = 1,  u, v, s >= 0.
    // The objective sum_{i in M} sigma_i (u_i - v_i) is linear in d = u - v,
    // so inflating u_i = v_i only wastes budget and cannot raise it.
    LinearProgram prog;
    prog.constraints = Matrix(dim + 1, 2 * n + 1);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < n; ++j) {
            prog.constraints.at(i, j) = t.at(i, j);
            prog.constraints.at(i, n + j) = -t.at(i, j);
        }
    }
    for (int j = 0; j < 2 * n; ++j) prog.constraints.at(dim, j) = 1.0;
    prog.constraints.at(dim, 2 * n) = 1.0;
    prog.rhs.assign(dim + 1, 0.0);
    prog.rhs[dim] = 1.0;

    double best = 0.0;
    Vector best_d(n, 0.0);
    const std::uint64_t patterns = std::uint64_t{1} << (ms - 1);  // sigma and -sigma coincide
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        prog.objective.assign(2 * n + 1, 0.0);
        for (int pos = 0; pos < ms; ++pos) {
            const double sigma = (pos == 0 || ((mask >> (pos - 1)) & 1u) == 0) ? 1.0 : -1.0;
            prog.objective[support[pos]] = -sigma;
            prog.objective[n + support[pos]] = sigma;
        }
        const LpOutcome out = solve_lp(prog, tol);
        if (out.status != LpStatus::optimal)
            throw Error("nsp_support_ratio: budgeted kernel LP must be optimal");
        const double value = -out.objective_value;
        if (value > best) {
            best = value;
            for (int j = 0; j < n; ++j) best_d[j] = out.solution[j] - out.solution[n + j];
        }
    }

    const double mass = norm_l1(best_d);
    if (mass > 1e-12)
        for (double& e : best_d) e /= mass;
    else
        best_d.assign(n, 0.0);
    return {std::max(best, 0.0), best_d};
}

NspReport nsp_check(const Matrix& t, int order, double tol, Execution exec) {
    const int n = t.cols;
    if (order < 1 || order > n) throw std::invalid_argument("nsp_check: need 1 <= order <= count");
    const std::uint64_t total = binomial(n, order);
    if (total > kNspEnumerationGuard)
        throw ScaleGuardError("nsp_check: support enumeration exceeds the guard");

    NspReport report;
    report.order = order;

    // vacuous case: trivial kernel means every ratio is zero
    if (null_space_basis(t, tol).cols == 0) {
        report.holds = true;
        report.worst_ratio = 0.0;
        report.worst_support = first_combination(order);
        report.strictness_margin = 0.5;
        return report;
    }

    std::uint64_t worst_rank = 0;
    double worst_ratio = -1.0;
    const auto ratio_at = [&](std::uint64_t rank) {
        return nsp_support_ratio(t, combination_from_rank(rank, n, order), tol).first;
    };
    const auto better = [](double ratio, std::uint64_t rank, double best_ratio,
                           std::uint64_t best_rank) {
        return ratio > best_ratio || (ratio == best_ratio && rank < best_rank);
    };

#ifdef _OPENMP
    if (exec == Execution::parallel) {
        detail::FirstError first_error;
#pragma omp parallel
        {
            double local_ratio = -1.0;
            std::uint64_t local_rank = 0;
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
                try {
                    const double ratio = ratio_at(static_cast<std::uint64_t>(r));
                    if (better(ratio, static_cast<std::uint64_t>(r), local_ratio, local_rank)) {
                        local_ratio = ratio;
                        local_rank = static_cast<std::uint64_t>(r);
                    }
                } catch (...) {
                    first_error.capture(static_cast<std::uint64_t>(r));
                }
            }
#pragma omp critical(sparsecert_nsp_merge)
            {
                if (local_ratio >= 0.0 && better(local_ratio, local_rank, worst_ratio, worst_rank)) {
                    worst_ratio = local_ratio;
                    worst_rank = local_rank;
                }
            }
        }
        first_error.rethrow_if_any();
    } else
#endif
    {
        (void)exec;
        for (std::uint64_t r = 0; r < total; ++r) {
            const double ratio = ratio_at(r);
            if (better(ratio, r, worst_ratio, worst_rank)) {
                worst_ratio = ratio;
                worst_rank = r;
            }
        }
    }

    report.worst_support = combination_from_rank(worst_rank, n, order);
    auto [ratio, witness] = nsp_support_ratio(t, report.worst_support, tol);
    report.worst_ratio = ratio;
    if (norm_l1(witness) > 0.5) report.witness = std::move(witness);
    report.holds = report.worst_ratio < 0.5 - kNspDecisionTol;
    report.strictness_margin = 0.5 - report.worst_ratio;
    return report;
}

KernelCounterexample counterexample_from_witness(const Matrix& t, const std::vector<int>& support,
                                                 const Vector& d, double tol) {
    const int n = t.cols;
    validate_support(support, n);
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("counterexample_from_witness: witness length mismatch");
    if (norm_linf(d) <= tol) throw NotInKernel("counterexample_from_witness: witness is zero");
    const double scale = std::max(1.0, max_abs(t) * norm_linf(d));
    if (norm_linf(matvec(t, d)) > tol * scale)
        throw NotInKernel("counterexample_from_witness: T d is not zero within tolerance");

    KernelCounterexample ce;
    ce.c.assign(d.size(), 0.0);
    ce.competitor.assign(d.size(), 0.0);
    std::size_t pos = 0;
    for (int j = 0; j < n; ++j) {
        const bool in_m = pos < support.size() && support[pos] == j;
        if (in_m) {
            ce.c[j] = d[j];
            ++pos;
        } else {
            ce.competitor[j] = -d[j];
        }
    }
    ce.x = matvec(t, ce.c);
    return ce;
}

}  // namespace sparsecert
