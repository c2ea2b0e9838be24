#pragma once

#include <cstddef>
#include <functional>

namespace trcq {

struct QuadResult {
    double value = 0.0;
    /// Sum of the local Richardson error estimates.
    double error = 0.0;
    bool converged = true;
};

/// Adaptive Simpson on [a, b] to max(rel_tol |I|, abs_floor). The interval is
/// first cut into `panels` pieces so that features narrower than (b - a) are
/// not missed by the first comparison. Never throws; check `converged`.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double rel_tol, double abs_floor = 1e-14, std::size_t panels = 16,
                            int max_depth = 50);

/// As adaptive_simpson but throws ConvergenceError carrying the achieved error.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_floor = 1e-14, std::size_t panels = 16);

struct MinResult {
    double x = 0.0;
    double value = 0.0;
};

/// Global scan on a log-spaced grid of `points` nodes in [lo, hi] followed
/// by golden-section refinement inside the bracket around the best node.
MinResult minimize_scan_golden(const std::function<double(double)>& f, double lo, double hi,
                               std::size_t points = 1024);

}  // namespace trcq
