#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trcq/report.hpp"
#include "trcq/smooth.hpp"
#include "trcq/symbols.hpp"

/// Sampled and quadrature-based checks of the inequalities behind the error
/// bound. Every leaf report stores its worst point; probe() re-evaluates a
/// point so that worst margins can be reproduced standalone.
namespace trcq::verify {

inline constexpr double kSampleTol = 1e-12;
inline constexpr double kDerivativeTol = 1e-8;
inline constexpr double kQuadratureTol = 1e-6;
/// Relative inset applied to the open disks |z| < pi and |z| < c_0.
inline constexpr double kBoundaryInset = 1e-3;

/// quantity <= bound is the inequality being checked.
struct Probe {
    double quantity = 0.0;
    double bound = 0.0;
};

/// Evaluate one point of a suite part. Parts that depend on a symbol read it
/// from `f`, or parse point["symbol"] when `f` is null.
Probe probe(const std::string& part, const nlohmann::json& point, const Symbol* f = nullptr);

/// bound - quantity of a stored point.
double reevaluate_margin(const std::string& part, const nlohmann::json& point,
                         const Symbol* f = nullptr);

/// tanh / coth bounds on x log-uniform in [1e-6, 1e3].
VerificationReport check_hyperbolic(std::size_t samples, std::uint64_t seed);
/// Bounds on delta(e^{-z}); part (c) for m = 1 .. m_max.
VerificationReport check_lemma31(std::size_t samples, std::uint64_t seed, int m_max = 5);
/// The same bounds for s_kappa with kappa uniform in (0, 1].
VerificationReport check_prop32(std::size_t samples, std::uint64_t seed, int m_max = 5);
/// 1 + |z|^m <= 2^{m/2} |1 + z|^m for m = 1 .. m_max.
VerificationReport check_lemma32(std::size_t samples, std::uint64_t seed, int m_max = 6);
/// Stability, derivative and approximation envelopes of a symbol with mu <= 0.
VerificationReport check_prop41(const Symbol& f, std::size_t samples, std::uint64_t seed,
                                const std::vector<double>& kappa_grid = {1.0, 0.5, 0.1, 0.01});
/// Frequency integrals of |sigma + i w|^{-alpha}: (a) outside |s| >= c / kappa, (b) full line.
VerificationReport check_lemma42(double sigma, double alpha, double c, double kappa);
/// int ||G(sigma + i w)|| dw <= (pi / sigma) int ||g''||. Needs a closed-form transform.
VerificationReport check_lemma33(const SmoothCausalFunction& g, double sigma);
/// int ||(s_kappa^m - s^m) G|| dw <= kappa^2 C_m^1 / (sigma min{sigma^m, 1}) int ||P_m g^{(m+4)}||.
/// Needs g = polyexp:k with k >= 2m + 4.
VerificationReport check_prop34a(const SmoothCausalFunction& g, double sigma, int m, double kappa);

/// Frequency integral of |sigma + i w|^{-alpha} over the stated region,
/// including the analytic tail; exposed for calibration tests.
double lemma42_integral(double sigma, double alpha, double c, double kappa, bool whole_line);

/// Scalar symbols with mu <= 0 used by the default suites.
std::vector<Symbol> default_prop41_zoo();

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs a named suite with its default parameters. Throws DomainError for
/// unknown names.
VerificationReport run_suite(const std::string& name, std::size_t samples, std::uint64_t seed);

}  // namespace trcq::verify
