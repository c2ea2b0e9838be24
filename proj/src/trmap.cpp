#include "trcq/trmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trcq/errors.hpp"

namespace trcq::trmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kDefaultTerms = 64;
// 16 terms leave a tail below 1e-25 at |z| = 0.5.
constexpr std::size_t kCrossoverTerms = 16;
constexpr double kPiGuard = 1e-3;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z, const char* what) {
    if (!finite(z)) {
        throw DomainError(std::string(what) + ": non-finite argument");
    }
}

// Horner evaluation of sum_{l < terms} b_l w^l.
template <typename T>
T horner(const std::vector<double>& coeffs, std::size_t terms, T w) {
    T acc = T(coeffs[terms - 1]);
    for (std::size_t l = terms - 1; l-- > 0;) {
        acc = acc * w + coeffs[l];
    }
    return acc;
}

}  // namespace

cplx delta_char(cplx zeta) {
    require_finite(zeta, "delta_char");
    const cplx denom = 1.0 + zeta;
    if (std::abs(denom) <= kEps) {
        throw PoleError("delta_char: zeta is numerically at the pole -1");
    }
    return 2.0 * (1.0 - zeta) / denom;
}

cplx s_kappa(cplx s, double kappa) {
    require_finite(s, "s_kappa");
    if (!(s.real() > 0.0)) {
        throw DomainError("s_kappa: requires Re s > 0");
    }
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("s_kappa: time step must lie in (0, 1]");
    }
    return (2.0 / kappa) * std::tanh(0.5 * kappa * s);
}

SeriesTable q_taylor_coeffs(std::size_t count) {
    if (count == 0) {
        throw DomainError("q_taylor_coeffs: need at least one coefficient");
    }
    // tanh x = sum_k t_k x^{2k+1} solves y' = 1 - y^2, giving
    // (2k + 1) t_k = -sum_{i+j=k-1} t_i t_j with t_0 = 1. All products in the
    // sum share one sign, so the recurrence is free of cancellation.
    // b_l = t_{l+1} / 4^{l+1}.
    std::vector<long double> t(count + 1);
    t[0] = 1.0L;
    for (std::size_t k = 1; k <= count; ++k) {
        long double acc = 0.0L;
        for (std::size_t i = 0; i < k; ++i) {
            acc += t[i] * t[k - 1 - i];
        }
        t[k] = -acc / static_cast<long double>(2 * k + 1);
    }

    SeriesTable table;
    table.coeffs_b.resize(count);
    table.coeffs_alpha.resize(count);
    long double scale = 0.25L;
    for (std::size_t l = 0; l < count; ++l) {
        const auto b = static_cast<double>(t[l + 1] * scale);
        table.coeffs_b[l] = b;
        table.coeffs_alpha[l] = std::abs(b);
        scale *= 0.25L;
    }
    if (count >= 2 && table.coeffs_alpha[count - 1] > 0.0) {
        table.tail_bound_radius =
            std::sqrt(table.coeffs_alpha[count - 2] / table.coeffs_alpha[count - 1]);
    }
    return table;
}

const SeriesTable& default_series() {
    static const SeriesTable table = q_taylor_coeffs(kDefaultTerms);
    return table;
}

cplx q_ratio(cplx z) {
    require_finite(z, "q_ratio");
    if (z == cplx(0.0, 0.0)) {
        return default_series().coeffs_b[0];
    }
    if (!(z.real() > 0.0) || std::abs(z) >= kPi) {
        throw DomainError("q_ratio: requires Re z > 0 and |z| < pi");
    }
    if (std::abs(z) <= kSeriesCrossover) {
        return horner(default_series().coeffs_b, kCrossoverTerms, z * z);
    }
    return (2.0 * std::tanh(0.5 * z) - z) / (z * z * z);
}

cplx tr_defect(cplx z) {
    require_finite(z, "tr_defect");
    if (z == cplx(0.0, 0.0)) {
        return 0.0;
    }
    if (!(z.real() > 0.0)) {
        throw DomainError("tr_defect: requires Re z > 0");
    }
    if (std::abs(z) <= kSeriesCrossover) {
        return z * z * z * horner(default_series().coeffs_b, kCrossoverTerms, z * z);
    }
    return 2.0 * std::tanh(0.5 * z) - z;
}

SeriesValue D_series(double sigma) {
    if (!std::isfinite(sigma) || sigma < 0.0 || sigma >= kPi - kPiGuard) {
        throw DomainError("D_eval: requires 0 <= sigma < pi - 1e-3 (the series diverges at pi)");
    }
    const auto& table = default_series();
    const auto& alpha = table.coeffs_alpha;
    const std::size_t n = alpha.size();
    const double x = sigma * sigma;

    SeriesValue out;
    out.value = horner(alpha, n, x);
    if (x > 0.0) {
        const double last = alpha[n - 1] * std::pow(x, static_cast<double>(n - 1));
        const double ratio = x * alpha[n - 1] / alpha[n - 2];
        out.tail = last * ratio / (1.0 - ratio);
        out.value += out.tail;
    }
    return out;
}

double D_eval(double sigma) { return D_series(sigma).value; }

double E_m_eval(double sigma, int m) {
    if (m < 1) {
        throw DomainError("E_m_eval: requires m >= 1");
    }
    const double d = D_eval(sigma);
    // D^j is monotone in j, so the max sits at j = 1 or j = m.
    const double max_power = std::max(d, std::pow(d, m));
    if (sigma == 0.0) {
        return max_power * m;
    }
    const double x = sigma * sigma;
    return max_power * std::expm1(m * std::log1p(x)) / x;
}

double solve_c0(double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("solve_c0: tolerance must be positive");
    }
    auto residual = [](double x) { return x * x * D_eval(x) - 1.0; };
    double lo = 0.1;
    double hi = kPi - 0.1;
    double best = 0.5 * (lo + hi);
    double best_res = std::abs(residual(best));
    // x^2 D(x) is strictly increasing, so bisection keeps the root bracketed.
    for (int iter = 0; iter < 200 && hi - lo > 2.0 * kEps * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double r = residual(mid);
        if (std::abs(r) < best_res) {
            best = mid;
            best_res = std::abs(r);
        }
        if (r == 0.0) {
            break;
        }
        (r < 0.0 ? lo : hi) = mid;
    }
    if (best_res > tol) {
        throw ConvergenceError("solve_c0: residual above tolerance at working precision",
                               best_res);
    }
    return best;
}

double c0() {
    static const double value = solve_c0(1e-13);
    return value;
}

}  // namespace trcq::trmap
