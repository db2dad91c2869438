#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsecert/frames.hpp"
#include "sparsecert/nsp.hpp"
#include "sparsecert/solvers.hpp"

namespace sparsecert {

// Recovery error bound for a trial to count as recovered.
inline constexpr double kRecoveryTol = 1e-6;

enum class Verdict { theorem_holds, counterexample_found };

struct TrialRecord {
    std::vector<int> support;
    Vector coefficients;
    bool l1_recovered = false;
    bool l0_recovered = false;
    bool l1_unique = false;
    bool l0_unique = false;
    double max_coefficient_error = 0.0;
};

struct RecoveryReport {
    std::string instance_id;
    CoherenceCertificate certificate;
    std::vector<TrialRecord> trials;
    Verdict verdict = Verdict::theorem_holds;
    std::uint64_t seed = 0;
};

// Plants coefficient vectors at the certified sparsity (sizes cycling 1..3
// when the threshold is infinite), solves both problems per trial, and
// records recovery and uniqueness. Trials run independently with sub-seed
// seed ^ trial index. Throws HypothesisError when the diagonal condition
// fails.
RecoveryReport verify_theorem_m(const FramePair& p, int trials, std::uint64_t seed,
                                double tol = kDefaultTol, Execution exec = Execution::parallel,
                                std::string instance_id = "");

struct IffReport {
    int order = 0;
    NspReport nsp;
    // populated when NSP holds: exhaustive planted recovery over all supports
    // of size <= order, draws_per_support coefficient draws each
    int supports_checked = 0;
    int draws_per_support = 0;
    bool recovery_all_unique = false;
    // populated when NSP fails: the witness-derived counterexample
    Vector counter_c;
    Vector counter_x;
    Vector counter_competitor;
    double counter_c_l1 = 0.0;
    double counter_competitor_l1 = 0.0;
    bool counterexample_valid = false;
    Verdict verdict = Verdict::theorem_holds;
    std::uint64_t seed = 0;
};

// Checks both directions of the NSP characterization on a concrete matrix:
// if NSP(order) holds, every sampled sparse vector must be the unique l1
// minimizer; if it fails, the witness construction must exhibit a feasible
// competitor no heavier than c.
IffReport verify_iff(const Matrix& t, int order, std::uint64_t seed, double tol = kDefaultTol,
                     Execution exec = Execution::parallel);

struct CorollaryReport {
    double classical_mu = 0.0;
    double functional_mu = 0.0;
    double classical_diag_min = 0.0;
    double functional_diag_min = 0.0;
    double classical_threshold = 0.0;
    double functional_threshold = 0.0;
    bool quantities_match = false;
    RecoveryReport recovery;
    Verdict verdict = Verdict::theorem_holds;
};

// Classical-route check: the Hilbert lift's certificate must coincide with
// the Gram quantities computed straight from the columns, and the lifted pair
// must pass verify_theorem_m. Throws NotNormalized when a column norm
// deviates from 1 by more than 1e-9.
CorollaryReport verify_corollary(const Matrix& t, int trials, std::uint64_t seed,
                                 Execution exec = Execution::parallel);

}  // namespace sparsecert
