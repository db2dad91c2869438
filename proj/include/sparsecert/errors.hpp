#pragma once

#include <stdexcept>
#include <string>

namespace sparsecert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pivot fell below the pivot tolerance during elimination.
struct SingularError : Error {
    using Error::Error;
};

// Columns of the candidate synthesis matrix do not span the ambient space.
struct NotAFrameError : Error {
    using Error::Error;
};

// The random generator exhausted its retry budget without an invertible frame operator.
struct GenerationFailed : Error {
    using Error::Error;
};

// Simplex exceeded its pivot budget; signals a bug or pathological input.
struct IterationLimit : Error {
    using Error::Error;
};

// Request exceeds an enumeration guard (oracle size, sign patterns, support count).
struct ScaleGuardError : Error {
    using Error::Error;
};

// Right-hand side lies outside the column span of the synthesis matrix.
struct InfeasibleError : Error {
    using Error::Error;
};

// Claimed witness is not a null vector of the synthesis matrix.
struct NotInKernel : Error {
    using Error::Error;
};

// A theorem hypothesis fails on the given instance; verification is refused, not judged.
struct HypothesisError : Error {
    using Error::Error;
};

// Frame columns are not unit-norm, so the classical statement does not apply.
struct NotNormalized : Error {
    using Error::Error;
};

}  // namespace sparsecert
