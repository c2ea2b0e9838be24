#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace trcq {

using cplx = std::complex<double>;

/// Seeded generator with a platform-independent uniform mapping.
///
/// std::uniform_real_distribution is implementation defined, so the 53-bit
/// mantissa is taken from the raw mt19937_64 output instead. Reports that
/// record a seed are therefore reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// log-uniform in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

/// Sampling rule for the open right half-plane: modulus log-uniform in
/// [min_modulus, max_modulus], argument uniform in (-pi/2 + 1e-6, pi/2 - 1e-6).
struct HalfPlaneSampler {
    double min_modulus = 1e-3;
    double max_modulus = 1e3;
    double arg_inset = 1e-6;

    cplx operator()(Rng& rng) const;
};

}  // namespace trcq
