#include "sparsecert/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sparsecert/errors.hpp"

namespace sparsecert {

namespace {

void require_finite(const std::vector<double>& entries, const char* what) {
    for (double e : entries) {
        if (!std::isfinite(e)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

}  // namespace

Matrix::Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
}

Matrix::Matrix(int r, int c, std::vector<double> entries) : rows(r), cols(c), data(std::move(entries)) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
    if (data.size() != static_cast<std::size_t>(r) * c)
        throw std::invalid_argument("Matrix: entry count does not match shape");
    require_finite(data, "Matrix");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vector Matrix::row(int r) const {
    Vector out(cols);
    for (int j = 0; j < cols; ++j) out[j] = at(r, j);
    return out;
}

Vector Matrix::col(int c) const {
    Vector out(rows);
    for (int i = 0; i < rows; ++i) out[i] = at(i, c);
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols != static_cast<int>(x.size())) throw std::invalid_argument("matvec: shape mismatch");
    Vector y(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i) {
        double acc = 0.0;
        for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double e : a.data) m = std::max(m, std::abs(e));
    return m;
}

double max_abs(const Vector& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

Vector solve_linear(const Matrix& a, const Vector& b) {
    if (a.rows != a.cols) throw std::invalid_argument("solve_linear: matrix not square");
    if (a.rows != static_cast<int>(b.size())) throw std::invalid_argument("solve_linear: rhs length mismatch");
    const int n = a.rows;
    const double pivot_tol = kDefaultTol * max_abs(a);

    Matrix work = a;
    Vector rhs = b;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(work.at(i, k)) > std::abs(work.at(piv, k))) piv = i;
        if (std::abs(work.at(piv, k)) <= pivot_tol)
            throw SingularError("solve_linear: pivot below tolerance at step " + std::to_string(k));
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(work.at(piv, j), work.at(k, j));
            std::swap(rhs[piv], rhs[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double f = work.at(i, k) / work.at(k, k);
            if (f == 0.0) continue;
            work.at(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) work.at(i, j) -= f * work.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    Vector x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = rhs[i];
        for (int j = i + 1; j < n; ++j) acc -= work.at(i, j) * x[j];
        x[i] = acc / work.at(i, i);
    }
    return x;
}

Echelon row_echelon(const Matrix& a, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("row_echelon: tol must be positive");
    Echelon e;
    e.reduced = a;
    e.col_perm.resize(a.cols);
    e.row_perm.resize(a.rows);
    for (int j = 0; j < a.cols; ++j) e.col_perm[j] = j;
    for (int i = 0; i < a.rows; ++i) e.row_perm[i] = i;
    e.pivot_threshold = tol * max_abs(a);

    Matrix& r = e.reduced;
    const int steps = std::min(a.rows, a.cols);
    for (int k = 0; k < steps; ++k) {
        // complete pivoting: largest remaining entry
        int pr = k, pc = k;
        double best = 0.0;
        for (int i = k; i < r.rows; ++i) {
            for (int j = k; j < r.cols; ++j) {
                const double v = std::abs(r.at(i, j));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best <= e.pivot_threshold) break;
        if (pr != k) {
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(pr, j), r.at(k, j));
            std::swap(e.row_perm[pr], e.row_perm[k]);
        }
        if (pc != k) {
            for (int i = 0; i < r.rows; ++i) std::swap(r.at(i, pc), r.at(i, k));
            std::swap(e.col_perm[pc], e.col_perm[k]);
        }
        for (int i = k + 1; i < r.rows; ++i) {
            const double f = r.at(i, k) / r.at(k, k);
            if (f == 0.0) continue;
            r.at(i, k) = 0.0;
            for (int j = k + 1; j < r.cols; ++j) r.at(i, j) -= f * r.at(k, j);
        }
        ++e.rank;
    }
    return e;
}

int rank_tol(const Matrix& a, double tol) {
    return row_echelon(a, tol).rank;
}

Matrix kernel_basis(const Matrix& a, double tol) {
    const Echelon e = row_echelon(a, tol);
    const int r = e.rank;
    const int nc = a.cols;
    Matrix basis(nc, nc - r);
    // one kernel vector per free (non-pivot) column of the echelon form
    for (int f = r; f < nc; ++f) {
        Vector w(nc, 0.0);
        w[f] = 1.0;
        for (int i = r - 1; i >= 0; --i) {
            double acc = 0.0;
            for (int j = i + 1; j < nc; ++j) acc += e.reduced.at(i, j) * w[j];
            w[i] = -acc / e.reduced.at(i, i);
        }
        for (int j = 0; j < nc; ++j) basis.at(e.col_perm[j], f - r) = w[j];
    }
    return basis;
}

std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b, double residual_tol) {
    if (a.rows != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_consistent: rhs length mismatch");

    // complete-pivot elimination over the matrix columns only, carrying b
    Matrix work = a;
    Vector rhs = b;
    std::vector<int> col_perm(a.cols);
    for (int j = 0; j < a.cols; ++j) col_perm[j] = j;
    const double pivot_threshold = kDefaultTol * max_abs(a);

    int rank = 0;
    const int steps = std::min(a.rows, a.cols);
    for (int k = 0; k < steps; ++k) {
        int pr = k, pc = k;
        double best = 0.0;
        for (int i = k; i < work.rows; ++i) {
            for (int j = k; j < work.cols; ++j) {
                const double v = std::abs(work.at(i, j));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best <= pivot_threshold) break;
        if (pr != k) {
            for (int j = 0; j < work.cols; ++j) std::swap(work.at(pr, j), work.at(k, j));
            std::swap(rhs[pr], rhs[k]);
        }
        if (pc != k) {
            for (int i = 0; i < work.rows; ++i) std::swap(work.at(i, pc), work.at(i, k));
            std::swap(col_perm[pc], col_perm[k]);
        }
        for (int i = k + 1; i < work.rows; ++i) {
            const double f = work.at(i, k) / work.at(k, k);
            if (f == 0.0) continue;
            work.at(i, k) = 0.0;
            for (int j = k + 1; j < work.cols; ++j) work.at(i, j) -= f * work.at(k, j);
            rhs[i] -= f * rhs[k];
        }
        ++rank;
    }

    Vector w(a.cols, 0.0);
    for (int i = rank - 1; i >= 0; --i) {
        double acc = rhs[i];
        for (int j = i + 1; j < a.cols; ++j) acc -= work.at(i, j) * w[j];
        w[i] = acc / work.at(i, i);
    }
    Vector x(a.cols, 0.0);
    for (int j = 0; j < a.cols; ++j) x[col_perm[j]] = w[j];

    const Vector res = matvec(a, x);
    for (int i = 0; i < a.rows; ++i)
        if (std::abs(res[i] - b[i]) > residual_tol) return std::nullopt;
    return x;
}

double norm_l0(const Vector& v, double tau) {
    if (tau < 0.0) throw std::invalid_argument("norm_l0: tau must be nonnegative");
    int count = 0;
    for (double e : v)
        if (std::abs(e) > tau) ++count;
    return static_cast<double>(count);
}

double norm_l1(const Vector& v) {
    double acc = 0.0;
    for (double e : v) acc += std::abs(e);
    return acc;
}

double norm_linf(const Vector& v) {
    return max_abs(v);
}

}  // namespace sparsecert
