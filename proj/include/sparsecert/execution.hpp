#pragma once

namespace sparsecert {

// Execution policy for the enumeration kernels. The parallel path uses OpenMP
// with deterministic reductions and must produce bit-identical results to the
// serial reference; tests compare the two. Builds without OpenMP fall back to
// the serial path.
enum class Execution { serial, parallel };

bool openmp_enabled();

}  // namespace sparsecert
