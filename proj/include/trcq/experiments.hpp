#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trcq/convolution.hpp"
#include "trcq/smooth.hpp"
#include "trcq/symbols.hpp"
#include "trcq/weights.hpp"

namespace trcq {

/// Largest grid an experiment may allocate.
inline constexpr std::size_t kMaxSteps = std::size_t{1} << 22;

/// Errors at or below this (relative to 1 + max |exact|) count as exact.
inline constexpr double kExactTol = 1e-12;

/// Closed-form table when the symbol is s^0, s^1 or s^{-1}, FFT weights otherwise.
WeightTable weights_for(const Symbol& f, double kappa, std::size_t steps);

/// Number of steps that reach t_final from kappa; throws DomainError when
/// t_final is not a multiple of kappa (to 1e-9 relative) or the grid is too large.
std::size_t steps_to(double t_final, double kappa);

/// TRCQ approximation of (f * g) on the grid of `kappa` up to `steps`.
/// Scalar g is copied into every input component.
CausalSignal run_convolution(const Symbol& f, const SmoothCausalFunction& g, double kappa,
                             std::size_t steps, bool use_fft = true);

/// max_{t_n <= t} |error_n|.
double max_error_up_to(const std::vector<double>& errors, double kappa, double t);

struct ConvergenceRow {
    double kappa = 0.0;
    double error = 0.0;
    /// log2(previous error / error); NaN on the first row.
    double eoc = 0.0;
    /// Error at roundoff level, so the EOC carries no information.
    bool exact = false;
};

/// Max-over-grid errors up to t_final for each kappa (strictly decreasing, in (0, 1]).
std::vector<ConvergenceRow> run_converge(const Symbol& f, const SmoothCausalFunction& g,
                                         double t_final, const std::vector<double>& kappas);

struct BoundRow {
    double t = 0.0;
    double kappa = 0.0;
    double observed = 0.0;
    double bound = 0.0;
    /// observed / bound, with 0 / 0 := 0.
    double ratio = 0.0;
};

/// Observed error and bound_rhs on the product grid; rows sorted by (t, kappa).
std::vector<BoundRow> run_bound(const Symbol& f, const SmoothCausalFunction& g,
                                const std::vector<double>& times, const std::vector<double>& kappas);

struct LongtimeResult {
    std::vector<double> times;
    std::vector<double> errors;
    /// Least-squares slope of log(error) against log(t).
    double slope = 0.0;
    /// Least-squares slope of log(error) against t.
    double rate = 0.0;
};

/// Errors on `points` geometrically spaced times in [t_start, t_final] and the two fits.
/// Throws DegenerateDataError when fewer than two positive errors remain.
LongtimeResult run_longtime(const Symbol& f, const SmoothCausalFunction& g, double kappa,
                            double t_final, std::size_t points, double t_start = 1.0);

/// Least-squares slope of y against x. Throws DegenerateDataError for fewer than
/// two points or constant x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace trcq
