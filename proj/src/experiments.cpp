#include "trcq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trcq/bounds.hpp"
#include "trcq/errors.hpp"
#include "trcq/exact.hpp"

namespace trcq {

namespace {

void check_decreasing(const std::vector<double>& kappas) {
    if (kappas.empty()) {
        throw DomainError("need at least one time step");
    }
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        if (!(kappas[i] > 0.0 && kappas[i] <= 1.0)) {
            throw DomainError("time steps must lie in (0, 1]");
        }
        if (i > 0 && !(kappas[i] < kappas[i - 1])) {
            throw DomainError("time steps must be strictly decreasing");
        }
    }
}

}  // namespace

WeightTable weights_for(const Symbol& f, double kappa, std::size_t steps) {
    if (f.spec() == "power:0") {
        return cq_weights_closed(ClosedKind::identity, kappa, steps);
    }
    if (f.spec() == "power:1") {
        return cq_weights_closed(ClosedKind::derivative, kappa, steps);
    }
    if (f.spec() == "power:-1") {
        return cq_weights_closed(ClosedKind::integral, kappa, steps);
    }
    return cq_weights_fft(f, kappa, steps);
}

std::size_t steps_to(double t_final, double kappa) {
    if (!(t_final > 0.0) || !(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("need t_final > 0 and kappa in (0, 1]");
    }
    const double ratio = t_final / kappa;
    if (ratio > static_cast<double>(kMaxSteps)) {
        throw DomainError("grid exceeds the memory budget of 2^22 steps");
    }
    const double n = std::round(ratio);
    if (std::abs(n - ratio) > 1e-9 * ratio || n < 1.0) {
        throw DomainError("t_final must be a positive multiple of kappa");
    }
    return static_cast<std::size_t>(n);
}

CausalSignal run_convolution(const Symbol& f, const SmoothCausalFunction& g, double kappa,
                             std::size_t steps, bool use_fft) {
    if (steps > kMaxSteps) {
        throw DomainError("grid exceeds the memory budget of 2^22 steps");
    }
    const Grid grid = make_grid(kappa, steps);
    const Eigen::Index dim = f.cols();
    const CausalSignal signal = sample(
        VectorFunction([&g, dim](double t) { return Vector::Constant(dim, g(t)); }), grid);
    const WeightTable w = weights_for(f, kappa, steps);
    return use_fft ? convolve_fft(w, signal) : convolve_naive(w, signal);
}

double max_error_up_to(const std::vector<double>& errors, double kappa, double t) {
    double worst = 0.0;
    for (std::size_t n = 0; n < errors.size(); ++n) {
        if (static_cast<double>(n) * kappa > t * (1.0 + 1e-12)) {
            break;
        }
        worst = std::max(worst, errors[n]);
    }
    return worst;
}

std::vector<ConvergenceRow> run_converge(const Symbol& f, const SmoothCausalFunction& g,
                                         double t_final, const std::vector<double>& kappas) {
    check_decreasing(kappas);
    if (!f.is_scalar()) {
        throw MissingExactSolutionError("convergence studies need a scalar symbol");
    }
    const ScalarFunction exact = exact_solution(f, g);
    std::vector<ConvergenceRow> rows;
    for (double kappa : kappas) {
        const std::size_t steps = steps_to(t_final, kappa);
        const CausalSignal out = run_convolution(f, g, kappa, steps);
        const std::vector<double> err = error_vs_exact(out, exact);
        double scale = 0.0;
        for (std::size_t n = 0; n <= steps; ++n) {
            scale = std::max(scale, std::abs(exact(out.grid.node(n))));
        }
        ConvergenceRow row;
        row.kappa = kappa;
        row.error = max_error_up_to(err, kappa, t_final);
        row.exact = row.error <= kExactTol * (1.0 + scale);
        row.eoc = rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                               : std::log2(rows.back().error / row.error);
        rows.push_back(row);
    }
    return rows;
}

std::vector<BoundRow> run_bound(const Symbol& f, const SmoothCausalFunction& g,
                                const std::vector<double>& times, const std::vector<double>& kappas) {
    if (times.empty() || kappas.empty()) {
        throw DomainError("need at least one time and one time step");
    }
    if (!f.is_scalar()) {
        throw MissingExactSolutionError("bound studies need a scalar symbol");
    }
    const ScalarFunction exact = exact_solution(f, g);
    const double t_max = *std::max_element(times.begin(), times.end());
    std::vector<BoundRow> rows;
    for (double kappa : kappas) {
        const std::size_t steps = steps_to(t_max, kappa);
        const CausalSignal out = run_convolution(f, g, kappa, steps);
        const std::vector<double> err = error_vs_exact(out, exact);
        for (double t : times) {
            BoundRow row;
            row.t = t;
            row.kappa = kappa;
            row.observed = max_error_up_to(err, kappa, t);
            row.bound = bound_rhs(f, g, kappa, t);
            if (row.bound > 0.0) {
                row.ratio = row.observed / row.bound;
            } else {
                row.ratio = row.observed == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            }
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BoundRow& a, const BoundRow& b) {
        return a.t != b.t ? a.t < b.t : a.kappa < b.kappa;
    });
    return rows;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DegenerateDataError("a slope fit needs at least two points");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw DegenerateDataError("a slope fit needs at least two distinct abscissae");
    }
    return sxy / sxx;
}

LongtimeResult run_longtime(const Symbol& f, const SmoothCausalFunction& g, double kappa,
                            double t_final, std::size_t points, double t_start) {
    if (points < 2) {
        throw DegenerateDataError("a long-time fit needs at least two times");
    }
    if (!(t_start > 0.0) || !(t_final > t_start)) {
        throw DegenerateDataError("a long-time fit needs 0 < t_start < t_final");
    }
    if (!f.is_scalar()) {
        throw MissingExactSolutionError("long-time studies need a scalar symbol");
    }
    const ScalarFunction exact = exact_solution(f, g);
    const std::size_t steps = steps_to(t_final, kappa);
    const CausalSignal out = run_convolution(f, g, kappa, steps);
    const std::vector<double> err = error_vs_exact(out, exact);

    LongtimeResult result;
    std::vector<double> log_t;
    std::vector<double> t_lin;
    std::vector<double> log_e;
    const double ratio = std::log(t_final / t_start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = i + 1 == points ? t_final : t_start * std::exp(ratio * static_cast<double>(i));
        const double e = max_error_up_to(err, kappa, t);
        result.times.push_back(t);
        result.errors.push_back(e);
        if (e > 0.0) {
            log_t.push_back(std::log(t));
            t_lin.push_back(t);
            log_e.push_back(std::log(e));
        }
    }
    result.slope = fit_slope(log_t, log_e);
    result.rate = fit_slope(t_lin, log_e);
    return result;
}

}  // namespace trcq
