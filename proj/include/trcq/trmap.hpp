#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "trcq/sampling.hpp"

/// Trapezoidal-rule characteristic function and the majorant series built
/// from its consistency error.
///
/// With delta(zeta) = 2 (1 - zeta) / (1 + zeta) the discrete Laplace variable
/// is s_kappa = delta(exp(-kappa s)) / kappa = (2 / kappa) tanh(kappa s / 2).
/// Its cubic defect q(z) = (delta(e^{-z}) - z) / z^3 = sum b_l z^{2l} is
/// analytic in |z| < pi; D(x) = sum |b_l| x^{2l} majorizes it there.
namespace trcq::trmap {

/// delta(zeta) = 2 (1 - zeta) / (1 + zeta). Throws PoleError near zeta = -1.
cplx delta_char(cplx zeta);

/// (2 / kappa) tanh(kappa s / 2) for Re s > 0 and kappa in (0, 1].
cplx s_kappa(cplx s, double kappa);

/// Taylor coefficients of q and their moduli.
struct SeriesTable {
    std::vector<double> coeffs_b;
    std::vector<double> coeffs_alpha;
    /// Radius implied by the ratio of the last two coefficients; the
    /// geometric tail estimate of D is valid strictly inside it.
    double tail_bound_radius = 0.0;

    std::size_t length() const noexcept { return coeffs_b.size(); }
};

/// First `count` coefficients b_0 .. b_{count-1}. Throws DomainError for count == 0.
SeriesTable q_taylor_coeffs(std::size_t count);

/// Shared 64-term table used by q_ratio and D_eval.
const SeriesTable& default_series();

/// q(z) = (delta(e^{-z}) - z) / z^3 for Re z > 0, |z| < pi (z = 0 gives b_0).
cplx q_ratio(cplx z);

/// |z| below which q_ratio switches to the truncated Taylor series.
inline constexpr double kSeriesCrossover = 0.5;

/// delta(e^{-z}) - z without cancellation, i.e. z^3 q(z), for |z| < pi.
cplx tr_defect(cplx z);

/// Truncated series plus its geometric tail estimate.
struct SeriesValue {
    double value = 0.0;  ///< partial sum + tail estimate
    double tail = 0.0;   ///< tail estimate that was added
};

/// D(sigma) with tail control; 0 <= sigma < pi - 1e-3.
SeriesValue D_series(double sigma);
double D_eval(double sigma);

/// max{D^j : j = 1..m} ((1 + sigma^2)^m - 1) / sigma^2, with the limit m at 0.
double E_m_eval(double sigma, int m);

/// Root of x^2 D(x) = 1 on (0, pi) by bisection. Throws ConvergenceError
/// when the residual cannot be pushed below tol.
double solve_c0(double tol);

/// Cached c_0 (residual below 1e-13).
double c0();

}  // namespace trcq::trmap
