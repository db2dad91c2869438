#include "sparsecert/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sparsecert/combinatorics.hpp"
#include "sparsecert/errors.hpp"

namespace sparsecert {

namespace {

void validate(const LinearProgram& prog) {
    const int m = static_cast<int>(prog.rhs.size());
    const int v = static_cast<int>(prog.objective.size());
    if (prog.constraints.rows != m || prog.constraints.cols != v)
        throw std::invalid_argument("LinearProgram: inconsistent shapes");
}

// Dense tableau. Columns 0..v-1 are the original variables, v..v+m-1 the
// phase-1 artificials; the rhs is kept per row. Bland's rule throughout:
// entering = smallest eligible index with negative reduced cost, leaving =
// smallest basic index among minimum-ratio rows.
class Tableau {
  public:
    Tableau(const LinearProgram& prog, double pivot_tol)
        : v_(static_cast<int>(prog.objective.size())),
          total_(v_ + static_cast<int>(prog.rhs.size())),
          pivot_tol_(pivot_tol),
          limit_(50 * (static_cast<int>(prog.rhs.size()) + v_)) {
        const int m = static_cast<int>(prog.rhs.size());
        rows_.reserve(m);
        for (int i = 0; i < m; ++i) {
            Vector row(total_ + 1, 0.0);
            const double sign = prog.rhs[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < v_; ++j) row[j] = sign * prog.constraints.at(i, j);
            row[v_ + i] = 1.0;
            row[total_] = sign * prog.rhs[i];
            rows_.push_back(std::move(row));
            basis_.push_back(v_ + i);
        }
    }

    int iterations() const { return iterations_; }
    int row_count() const { return static_cast<int>(rows_.size()); }

    void load_phase1_costs() {
        red_.assign(total_, 0.0);
        for (int i = v_; i < total_; ++i) red_[i] = 1.0;
        subtract_basic_costs([this](int var) { return var >= v_ ? 1.0 : 0.0; });
    }

    void load_phase2_costs(const Vector& objective) {
        red_.assign(total_, 0.0);
        for (int j = 0; j < v_; ++j) red_[j] = objective[j];
        subtract_basic_costs([&](int var) { return var < v_ ? objective[var] : 0.0; });
    }

    // Runs simplex to optimality. Returns false when unbounded. Only original
    // variables may enter; artificials never re-enter once out of the basis.
    bool iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < v_; ++j) {
                if (red_[j] < -pivot_tol_) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < row_count(); ++i) {
                const double a = rows_[i][enter];
                if (a <= pivot_tol_) continue;
                const double ratio = rows_[i][total_] / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    double phase1_objective() const {
        double acc = 0.0;
        for (int i = 0; i < row_count(); ++i)
            if (basis_[i] >= v_) acc += rows_[i][total_];
        return acc;
    }

    // Pivots leftover zero-level artificials onto original columns; rows with
    // no eligible pivot are redundant and dropped.
    void purge_artificials() {
        for (int i = 0; i < row_count();) {
            if (basis_[i] < v_) {
                ++i;
                continue;
            }
            int enter = -1;
            for (int j = 0; j < v_; ++j) {
                if (std::abs(rows_[i][j]) > pivot_tol_) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) {
                pivot(i, enter);
                ++i;
            } else {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
    }

    Vector extract_solution() const {
        Vector y(v_, 0.0);
        for (int i = 0; i < row_count(); ++i)
            if (basis_[i] < v_) y[basis_[i]] = rows_[i][total_];
        return y;
    }

  private:
    template <typename CostOf>
    void subtract_basic_costs(CostOf cost_of) {
        for (int i = 0; i < row_count(); ++i) {
            const double c = cost_of(basis_[i]);
            if (c == 0.0) continue;
            for (int j = 0; j < total_; ++j) red_[j] -= c * rows_[i][j];
        }
        // basic columns must carry exact zero reduced cost
        for (int i = 0; i < row_count(); ++i) red_[basis_[i]] = 0.0;
    }

    void pivot(int leave, int enter) {
        if (++iterations_ > limit_) throw IterationLimit("solve_lp: pivot budget exhausted");
        Vector& prow = rows_[leave];
        const double p = prow[enter];
        for (double& e : prow) e /= p;
        prow[enter] = 1.0;
        for (int i = 0; i < row_count(); ++i) {
            if (i == leave) continue;
            const double f = rows_[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= total_; ++j) rows_[i][j] -= f * prow[j];
            rows_[i][enter] = 0.0;
        }
        const double fr = red_[enter];
        if (fr != 0.0) {
            for (int j = 0; j < total_; ++j) red_[j] -= fr * prow[j];
            red_[enter] = 0.0;
        }
        basis_[leave] = enter;
    }

    int v_;
    int total_;
    double pivot_tol_;
    int limit_;
    int iterations_ = 0;
    std::vector<Vector> rows_;
    Vector red_;
    std::vector<int> basis_;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& prog, double tol) {
    validate(prog);
    if (tol <= 0.0) throw std::invalid_argument("solve_lp: tol must be positive");

    // feasibility tolerance (tol) stays decoupled from the pivot tolerance
    Tableau tab(prog, kDefaultTol);

    tab.load_phase1_costs();
    if (!tab.iterate()) throw IterationLimit("solve_lp: phase 1 cannot be unbounded");
    if (tab.phase1_objective() > tol)
        return LpOutcome{LpStatus::infeasible, {}, 0.0, tab.iterations()};
    tab.purge_artificials();

    tab.load_phase2_costs(prog.objective);
    if (!tab.iterate()) return LpOutcome{LpStatus::unbounded, {}, 0.0, tab.iterations()};

    LpOutcome out;
    out.status = LpStatus::optimal;
    out.solution = tab.extract_solution();
    out.objective_value = dot(prog.objective, out.solution);
    out.iterations = tab.iterations();
    return out;
}

namespace {

constexpr double kOracleEps = 1e-7;

bool oracle_feasible(const LinearProgram& prog, const Vector& y) {
    for (double e : y)
        if (e < -kOracleEps) return false;
    const Vector res = matvec(prog.constraints, y);
    const double scale = std::max(1.0, max_abs(prog.rhs));
    for (std::size_t i = 0; i < res.size(); ++i)
        if (std::abs(res[i] - prog.rhs[i]) > kOracleEps * scale) return false;
    return true;
}

}  // namespace

LpOutcome lp_oracle_enumerate(const LinearProgram& prog) {
    validate(prog);
    const int m = static_cast<int>(prog.rhs.size());
    const int v = static_cast<int>(prog.objective.size());
    if (v > 12 || m > 8)
        throw ScaleGuardError("lp_oracle_enumerate: instance beyond the enumeration guard");

    const Echelon ech = row_echelon(prog.constraints, kDefaultTol);
    const int r = ech.rank;

    // independent rows chosen by the echelon row permutation
    Matrix ar(r, v);
    Vector br(r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < v; ++j) ar.at(i, j) = prog.constraints.at(ech.row_perm[i], j);
        br[i] = prog.rhs[ech.row_perm[i]];
    }

    // every vertex of {y >= 0 : A y = b} is a basic solution on r columns;
    // candidates are validated against the full system, which also catches
    // inconsistent dropped rows
    std::optional<LpOutcome> best;
    std::vector<int> subset = first_combination(r);
    for (bool more = true; more; more = next_combination(subset, v)) {
        Matrix square(r, r);
        for (int i = 0; i < r; ++i)
            for (int t = 0; t < r; ++t) square.at(i, t) = ar.at(i, subset[t]);
        Vector packed;
        try {
            packed = solve_linear(square, br);
        } catch (const SingularError&) {
            continue;
        }
        Vector y(v, 0.0);
        for (int t = 0; t < r; ++t) y[subset[t]] = packed[t];
        if (!oracle_feasible(prog, y)) continue;
        const double obj = dot(prog.objective, y);
        if (!best || obj < best->objective_value) best = LpOutcome{LpStatus::optimal, y, obj, 0};
        if (r == 0) break;  // only the empty basis exists
    }
    if (!best) return LpOutcome{LpStatus::infeasible, {}, 0.0, 0};

    // unbounded iff some extreme ray of {w >= 0 : A w = 0} has negative cost;
    // extreme rays live on supports of size <= r + 1 whose columns have
    // nullity exactly one
    for (int t = 1; t <= std::min(v, r + 1); ++t) {
        std::vector<int> sup = first_combination(t);
        for (bool more = true; more; more = next_combination(sup, v)) {
            Matrix cols(m, t);
            for (int i = 0; i < m; ++i)
                for (int s = 0; s < t; ++s) cols.at(i, s) = prog.constraints.at(i, sup[s]);
            const Matrix kb = kernel_basis(cols, kDefaultTol);
            if (kb.cols != 1) continue;
            Vector z = kb.col(0);
            const double zmax = max_abs(z);
            if (zmax == 0.0) continue;
            double lo = 0.0, hi = 0.0;
            for (double e : z) {
                lo = std::min(lo, e);
                hi = std::max(hi, e);
            }
            if (lo < -1e-9 * zmax && hi > 1e-9 * zmax) continue;  // mixed signs: not a ray
            if (hi <= 1e-9 * zmax)
                for (double& e : z) e = -e;
            double l1 = 0.0;
            for (double e : z) l1 += std::abs(e);
            double cost = 0.0;
            for (int s = 0; s < t; ++s) cost += prog.objective[sup[s]] * z[s] / l1;
            if (cost < -1e-8) return LpOutcome{LpStatus::unbounded, {}, 0.0, 0};
        }
    }
    return *best;
}

}  // namespace sparsecert
