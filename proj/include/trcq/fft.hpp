#pragma once

#include <cstddef>
#include <vector>

#include "trcq/sampling.hpp"

namespace trcq {

bool is_power_of_two(std::size_t n) noexcept;
/// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

/// Radix-2 iterative FFT of a fixed length with precomputed twiddles.
/// Sequential and bit-reproducible. Instantiated for double and long double.
template <typename Real>
class BasicFftPlan {
public:
    using Complex = std::complex<Real>;

    explicit BasicFftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    /// X_k = sum_j x_j exp(-2 pi i jk / n), in place.
    void forward(std::vector<Complex>& data) const;
    /// x_j = (1/n) sum_k X_k exp(2 pi i jk / n), in place.
    void inverse(std::vector<Complex>& data) const;

private:
    void transform(std::vector<Complex>& data, bool inverse) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    // Stage with half-length h reads exp(-pi i k / h), k < h, from [h, 2h).
    std::vector<Complex> twiddle_;
};

using FftPlan = BasicFftPlan<double>;
/// 64-bit mantissa on x86; used where cancellation makes double too coarse.
using ExtendedFftPlan = BasicFftPlan<long double>;

extern template class BasicFftPlan<double>;
extern template class BasicFftPlan<long double>;

}  // namespace trcq
