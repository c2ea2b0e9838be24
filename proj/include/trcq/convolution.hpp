#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "trcq/value.hpp"
#include "trcq/weights.hpp"

namespace trcq {

/// Uniform grid t_n = n kappa, n = 0 .. steps.
struct Grid {
    double kappa = 0.0;
    std::size_t steps = 0;

    double node(std::size_t n) const noexcept { return static_cast<double>(n) * kappa; }
    double final_time() const noexcept { return node(steps); }
};

/// Throws DomainError unless kappa lies in (0, 1].
Grid make_grid(double kappa, std::size_t steps);

/// Samples on a grid; column n holds the value at t_n.
struct CausalSignal {
    Grid grid;
    Eigen::MatrixXcd samples;

    Eigen::Index dim() const noexcept { return samples.rows(); }
    Vector at(std::size_t n) const { return samples.col(static_cast<Eigen::Index>(n)); }
};

using VectorFunction = std::function<Vector(double)>;
using ScalarFunction = std::function<double(double)>;

CausalSignal sample(const VectorFunction& fn, const Grid& grid);
CausalSignal sample(const ScalarFunction& fn, const Grid& grid);

/// Direct O(N^2) evaluation of sum_{m <= n} omega_{n-m} g_m with Kahan summation.
CausalSignal convolve_naive(const WeightTable& w, const CausalSignal& g);

/// Same contract through a zero-padded radix-2 FFT of length >= 2 (N + 1).
CausalSignal convolve_fft(const WeightTable& w, const CausalSignal& g);

/// Per-node ||computed_n - exact(t_n)||.
std::vector<double> error_vs_exact(const CausalSignal& computed, const VectorFunction& exact);
std::vector<double> error_vs_exact(const CausalSignal& computed, const ScalarFunction& exact);

/// Rows `n,t,re_0,im_0,...` with a header line, 17 significant digits.
void write_signal_csv(std::ostream& os, const CausalSignal& signal);

}  // namespace trcq
