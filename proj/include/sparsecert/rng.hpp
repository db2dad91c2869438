#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sparsecert {

// Deterministic random source. All draws are pinned by the mt19937_64 stream,
// so a given seed reproduces the same sequence on every run.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        // 53 uniform bits in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Marsaglia polar method; avoids trig so the stream stays portable.
    double normal() {
        for (;;) {
            const double a = 2.0 * uniform01() - 1.0;
            const double b = 2.0 * uniform01() - 1.0;
            const double s = a * a + b * b;
            if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    // Uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r < limit) return r % n;
        }
    }

    bool coin() { return (engine_() & 1u) != 0; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace sparsecert
