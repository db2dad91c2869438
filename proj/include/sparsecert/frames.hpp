#pragma once

#include <cstdint>
#include <optional>

#include "sparsecert/matcore.hpp"

namespace sparsecert {

// Finite model of a 1-approximate Schauder frame: analysis row n holds the
// functional f_n, synthesis column m holds the vector tau_m.
struct FramePair {
    int dim = 0;
    int count = 0;
    Matrix analysis;   // count x dim
    Matrix synthesis;  // dim x count
};

// Shape-validating constructor. Invertibility of the frame operator is a
// certified property, not a construction precondition.
FramePair make_frame_pair(Matrix analysis, Matrix synthesis);

// Cross-Gram diagnostics and the sparsity threshold they certify.
struct CoherenceCertificate {
    double mu = 0.0;
    double diag_min = 0.0;
    double threshold = 0.0;                      // +infinity exactly when mu is treated as zero
    std::optional<int> max_certified_sparsity;   // nullopt marks the unbounded case
    bool diag_condition_holds = false;
    bool frame_operator_invertible = false;
};

// G[n][m] = f_n(tau_m) = analysis * synthesis.
Matrix cross_gram(const FramePair& p);

// Largest off-diagonal magnitude; 0 for 1x1.
double coherence(const Matrix& g);

// (1 + 1/mu)/2 for mu > 0, +infinity at mu = 0.
double sparsity_threshold(double mu);

// synthesis * analysis, the dim x dim frame operator.
Matrix frame_operator(const FramePair& p);

CoherenceCertificate certify(const FramePair& p, double tol = kDefaultTol);

// Hilbert lift: analysis = transpose of synthesis, so the cross-Gram is the
// classical Gram matrix. Throws NotAFrameError when columns do not span.
FramePair from_hilbert_frame(const Matrix& t);

enum class PairKind { hilbert_normalized, asf_unit_diagonal };

// Deterministic in seed. hilbert_normalized draws unit-norm columns and lifts;
// asf_unit_diagonal draws analysis and synthesis independently and rescales
// each analysis row so f_n(tau_n) = 1. Retries (up to 16) until the frame
// operator is invertible; throws GenerationFailed past the budget.
FramePair random_pair(int dim, int count, PairKind kind, std::uint64_t seed);

// The unit-norm three-element frame of R^2 used as a walkthrough fixture:
// tau1 = (1,0), tau2 = (-1/2, sqrt(3)/2), tau3 = (-1/2, -sqrt(3)/2).
Matrix mercedes_benz_synthesis();
FramePair mercedes_benz_pair();

}  // namespace sparsecert
