#include "sparsecert/frames.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "sparsecert/errors.hpp"
#include "sparsecert/rng.hpp"

namespace sparsecert {

FramePair make_frame_pair(Matrix analysis, Matrix synthesis) {
    if (analysis.rows != synthesis.cols || analysis.cols != synthesis.rows)
        throw std::invalid_argument("make_frame_pair: analysis and synthesis shapes do not pair");
    if (analysis.rows < 1 || analysis.cols < 1)
        throw std::invalid_argument("make_frame_pair: empty frame");
    FramePair p;
    p.dim = analysis.cols;
    p.count = analysis.rows;
    p.analysis = std::move(analysis);
    p.synthesis = std::move(synthesis);
    return p;
}

Matrix cross_gram(const FramePair& p) {
    return matmul(p.analysis, p.synthesis);
}

double coherence(const Matrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("coherence: matrix not square");
    double mu = 0.0;
    for (int n = 0; n < g.rows; ++n)
        for (int m = 0; m < g.cols; ++m)
            if (n != m) mu = std::max(mu, std::abs(g.at(n, m)));
    return mu;
}

double sparsity_threshold(double mu) {
    if (mu < 0.0) throw std::invalid_argument("sparsity_threshold: mu must be nonnegative");
    if (mu == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * (1.0 + 1.0 / mu);
}

Matrix frame_operator(const FramePair& p) {
    return matmul(p.synthesis, p.analysis);
}

CoherenceCertificate certify(const FramePair& p, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("certify: tol must be positive");
    const Matrix g = cross_gram(p);

    CoherenceCertificate cert;
    cert.mu = coherence(g);
    cert.diag_min = std::numeric_limits<double>::infinity();
    for (int n = 0; n < g.rows; ++n) cert.diag_min = std::min(cert.diag_min, std::abs(g.at(n, n)));
    cert.diag_condition_holds = cert.diag_min >= 1.0 - tol;
    cert.frame_operator_invertible = rank_tol(frame_operator(p), tol) == p.dim;

    // Gram dust below tol is treated as exact zero so the threshold cannot
    // collapse to a spurious finite value near 1/tol.
    if (cert.mu <= tol) {
        cert.threshold = std::numeric_limits<double>::infinity();
        cert.max_certified_sparsity = std::nullopt;
    } else {
        cert.threshold = sparsity_threshold(cert.mu);
        // strict inequality at the boundary: an integral threshold certifies
        // threshold - 1
        const double nearest = std::round(cert.threshold);
        int k;
        if (std::abs(cert.threshold - nearest) <= tol)
            k = static_cast<int>(nearest) - 1;
        else
            k = static_cast<int>(std::floor(cert.threshold));
        cert.max_certified_sparsity = k;
    }
    return cert;
}

FramePair from_hilbert_frame(const Matrix& t) {
    if (rank_tol(t, kDefaultTol) != t.rows)
        throw NotAFrameError("from_hilbert_frame: columns do not span the ambient space");
    return make_frame_pair(t.transposed(), t);
}

namespace {

Matrix random_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (double& e : m.data) e = rng.normal();
    return m;
}

constexpr int kRetryBudget = 16;

}  // namespace

FramePair random_pair(int dim, int count, PairKind kind, std::uint64_t seed) {
    if (dim < 1 || count < dim) throw std::invalid_argument("random_pair: need count >= dim >= 1");
    Rng rng(seed);

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        if (kind == PairKind::hilbert_normalized) {
            Matrix t = random_matrix(rng, dim, count);
            bool degenerate = false;
            for (int j = 0; j < count && !degenerate; ++j) {
                double norm2 = 0.0;
                for (int i = 0; i < dim; ++i) norm2 += t.at(i, j) * t.at(i, j);
                const double norm = std::sqrt(norm2);
                if (norm < 1e-6) {
                    degenerate = true;
                    break;
                }
                for (int i = 0; i < dim; ++i) t.at(i, j) /= norm;
            }
            if (degenerate || rank_tol(t, kDefaultTol) != dim) continue;
            return make_frame_pair(t.transposed(), t);
        }

        Matrix analysis = random_matrix(rng, count, dim);
        Matrix synthesis = random_matrix(rng, dim, count);
        bool degenerate = false;
        for (int n = 0; n < count; ++n) {
            double g = 0.0;
            for (int i = 0; i < dim; ++i) g += analysis.at(n, i) * synthesis.at(i, n);
            if (std::abs(g) < 1e-6) {
                degenerate = true;
                break;
            }
            for (int i = 0; i < dim; ++i) analysis.at(n, i) /= g;
        }
        if (degenerate) continue;
        FramePair p = make_frame_pair(std::move(analysis), std::move(synthesis));
        if (rank_tol(frame_operator(p), kDefaultTol) == dim) return p;
    }
    throw GenerationFailed("random_pair: no invertible frame operator within the retry budget");
}

Matrix mercedes_benz_synthesis() {
    const double s = std::sqrt(3.0) / 2.0;
    return Matrix(2, 3, {1.0, -0.5, -0.5, 0.0, s, -s});
}

FramePair mercedes_benz_pair() {
    return from_hilbert_frame(mercedes_benz_synthesis());
}

}  // namespace sparsecert
