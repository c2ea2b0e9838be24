#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "trcq/symbols.hpp"
#include "trcq/value.hpp"

namespace trcq {

/// Weights omega_0 .. omega_N of the generating function
/// zeta -> F(delta(zeta) / kappa) = sum_m omega_m zeta^m.
struct WeightTable {
    double kappa = 0.0;
    std::vector<Value> values;
    /// Contour radius used by the FFT (0 for closed-form tables).
    double radius = 0.0;
    /// Number of contour nodes (0 for closed-form tables).
    std::size_t fft_size = 0;
    /// Absolute accuracy claimed for every weight (0 for closed-form tables).
    double accuracy_estimate = 0.0;
    Eigen::Index rows = 1;
    Eigen::Index cols = 1;

    std::size_t count() const noexcept { return values.size(); }
    /// Entry (i, j) of every weight as one sequence.
    std::vector<cplx> entry(Eigen::Index i, Eigen::Index j) const;
};

/// Default contour size: the smallest power of two >= 8 (N + 1).
std::size_t default_fft_size(std::size_t steps);

/// Contour radius for `fft_size` nodes and `steps` + 1 wanted coefficients.
///
/// Aliasing decays like rho^L while the rho^{-m} rescaling amplifies roundoff
/// by rho^{-N}; rho = eps^{1/(L + N)} makes both of size eps^{L / (L + N)}.
double contour_radius(std::size_t fft_size, std::size_t steps);

/// Weights omega_0 .. omega_steps by an FFT over the circle |zeta| = rho.
/// fft_size = 0 selects default_fft_size(steps). Throws ShapeError when
/// fft_size < steps + 1 or is not a power of two.
WeightTable cq_weights_fft(const Symbol& f, double kappa, std::size_t steps,
                           std::size_t fft_size = 0);

enum class ClosedKind { identity, derivative, integral };

/// Parses "identity", "derivative" or "integral".
ClosedKind parse_closed_kind(const std::string& name);

/// Exact tables for F = 1, F = s and F = 1/s.
WeightTable cq_weights_closed(ClosedKind kind, double kappa, std::size_t steps);

/// max_m ||a_m - b_m||. Throws GridMismatchError for different kappa and
/// ShapeError for different lengths or dimensions.
double compare_weight_tables(const WeightTable& a, const WeightTable& b);

/// One block per matrix entry: `# entry i,j`, the header `m,re,im`, then rows.
void write_weights_csv(std::ostream& os, const WeightTable& table);

}  // namespace trcq
