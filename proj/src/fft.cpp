#include "trcq/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "trcq/errors.hpp"

namespace trcq {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        if (p > (std::size_t{1} << 62)) {
            throw ShapeError("transform length overflow");
        }
        p <<= 1;
    }
    return p;
}

template <typename Real>
BasicFftPlan<Real>::BasicFftPlan(std::size_t n) : n_(n) {
    if (!is_power_of_two(n)) {
        throw ShapeError("FFT length must be a power of two");
    }
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    bitrev_.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        bitrev_[i] = (bitrev_[i >> 1] >> 1) | ((i & 1u) << (bits - 1));
    }
    // Angles in the first octant are evaluated directly; the rest follow from
    // exact symmetries, so every twiddle stays correctly rounded.
    std::vector<Complex> base(n / 2);
    const auto angle = [n](std::size_t k) {
        return Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n);
    };
    if (n < 8) {
        for (std::size_t k = 0; k < n / 2; ++k) {
            base[k] = Complex(std::cos(angle(k)), -std::sin(angle(k)));
        }
    } else {
        const std::size_t quarter = n / 4;
        for (std::size_t k = 0; k <= n / 8; ++k) {
            const Real c = std::cos(angle(k));
            const Real s = std::sin(angle(k));
            base[k] = Complex(c, -s);
            base[quarter - k] = Complex(s, -c);
        }
        for (std::size_t k = quarter; k < n / 2; ++k) {
            const Complex w = base[k - quarter];
            base[k] = Complex(w.imag(), -w.real());
        }
    }
    twiddle_.assign(std::max<std::size_t>(n, 1), Complex(1, 0));
    for (std::size_t half = 1; half < n; half <<= 1) {
        const std::size_t stride = n / (2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            twiddle_[half + k] = base[k * stride];
        }
    }
}

template <typename Real>
void BasicFftPlan<Real>::forward(std::vector<Complex>& data) const {
    transform(data, false);
}

template <typename Real>
void BasicFftPlan<Real>::inverse(std::vector<Complex>& data) const {
    transform(data, true);
    const Real scale = Real(1) / static_cast<Real>(n_);
    for (auto& x : data) {
        x *= scale;
    }
}

template <typename Real>
void BasicFftPlan<Real>::transform(std::vector<Complex>& data, bool inverse) const {
    if (data.size() != n_) {
        throw ShapeError("FFT input length does not match the plan");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t half = 1; half < n_; half <<= 1) {
        const Complex* tw = twiddle_.data() + half;
        for (std::size_t start = 0; start < n_; start += 2 * half) {
            Complex* lo = data.data() + start;
            Complex* hi = lo + half;
            for (std::size_t k = 0; k < half; ++k) {
                const Real wr = tw[k].real();
                const Real wi = inverse ? -tw[k].imag() : tw[k].imag();
                const Complex u = lo[k];
                const Complex b = hi[k];
                // Plain real arithmetic avoids the Annex G slow path of complex multiply.
                const Complex v(b.real() * wr - b.imag() * wi, b.real() * wi + b.imag() * wr);
                lo[k] = u + v;
                hi[k] = u - v;
            }
        }
    }
}

template class BasicFftPlan<double>;
template class BasicFftPlan<long double>;

}  // namespace trcq
