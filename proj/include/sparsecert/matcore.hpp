#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace sparsecert {

using Vector = std::vector<double>;

// Default pivot/feasibility tolerance; scaled by input magnitude where noted.
inline constexpr double kDefaultTol = 1e-9;

// Dense row-major matrix of finite reals.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c);
    Matrix(int r, int c, std::vector<double> entries);

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n);
    Matrix transposed() const;
    Vector row(int r) const;
    Vector col(int c) const;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
double dot(const Vector& a, const Vector& b);
double max_abs(const Matrix& a);
double max_abs(const Vector& v);

// Gaussian elimination with partial pivoting on a square system.
// Throws SingularError when a pivot magnitude falls below 1e-9 times the
// largest absolute entry of the input.
Vector solve_linear(const Matrix& a, const Vector& b);

// Row echelon form under complete pivoting. Column swaps are recorded in
// col_perm: reduced column j holds input column col_perm[j]. Row swaps are
// recorded in row_perm so callers can identify an independent row set.
struct Echelon {
    Matrix reduced;
    std::vector<int> col_perm;
    std::vector<int> row_perm;
    int rank = 0;
    double pivot_threshold = 0.0;
};
Echelon row_echelon(const Matrix& a, double tol);

// Pivot count with magnitude above tol times the largest initial pivot candidate.
int rank_tol(const Matrix& a, double tol);

// Columns span {x : a x = 0} at tolerance tol; cols = a.cols - rank_tol(a, tol).
Matrix kernel_basis(const Matrix& a, double tol);

// Any x with ||a x - b||_inf <= residual_tol for a possibly rectangular
// system; free coordinates are set to zero. nullopt when inconsistent.
std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b, double residual_tol);

// Nonzero count with entries of magnitude <= tau treated as zero.
double norm_l0(const Vector& v, double tau);
double norm_l1(const Vector& v);
double norm_linf(const Vector& v);

}  // namespace sparsecert
