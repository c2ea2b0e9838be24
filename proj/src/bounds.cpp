#include "trcq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "trcq/errors.hpp"
#include "trcq/quadrature.hpp"
#include "trcq/trmap.hpp"

namespace trcq {

namespace {

constexpr double kEndInset = 1e-2;
constexpr std::size_t kScanPoints = 1024;
constexpr double kQuadRelTol = 1e-9;
constexpr double kQuadAbsFloor = 1e-14;

double e_over_two_pi() { return std::numbers::e / (2.0 * std::numbers::pi); }

double binom(int n, int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) {
        c = c * (n - k + j) / j;
    }
    return c;
}

}  // namespace

BoundParams derive_shape(double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw DomainError("bound parameters need a finite mu >= 0");
    }
    BoundParams p;
    p.mu = mu;
    p.m = static_cast<int>(std::ceil(mu));
    p.alpha = static_cast<int>(std::floor(mu - p.m)) + 5;
    p.beta = std::max(2 * p.m + 4, p.m + p.alpha);
    p.epsilon = std::max(2.0 * p.m - mu + 1.0, std::floor(mu) - mu + 3.0);
    p.delta_shift = std::floor(mu) - mu + 1.0;
    return p;
}

BoundParams derive_params(double mu) {
    BoundParams p = derive_shape(mu);
    p.constants = const_chain(mu);
    return p;
}

double theta1(double sigma, double mu, const CFModel& cf) {
    if (!(sigma > 0.0)) {
        throw DomainError("theta1 needs sigma > 0");
    }
    if (mu > 0.0) {
        throw DomainError("theta1 is defined for mu <= 0");
    }
    const double x = 0.5 * std::min(sigma, 1.0);
    return std::pow(x, mu) * cf(x);
}

double theta2(double sigma, double mu, const CFModel& cf) {
    if (!(sigma > 0.0)) {
        throw DomainError("theta2 needs sigma > 0");
    }
    if (mu > 0.0) {
        throw DomainError("theta2 is defined for mu <= 0");
    }
    return std::pow(2.0, 1.0 - mu) / sigma * cf(0.5 * sigma);
}

double theta3(double sigma, double mu) {
    if (mu > 0.0) {
        throw DomainError("theta3 is defined for mu <= 0");
    }
    if (!(sigma > 0.0) || !(sigma < trmap::c0())) {
        throw DomainError("theta3 needs 0 < sigma < c0");
    }
    const double d = trmap::D_eval(sigma);
    if (mu == 0.0) {
        return d;
    }
    return d * std::pow(1.0 - sigma * sigma * d, mu);
}

double apply_Pm(const SmoothCausalFunction& g, int m, double t, int shift) {
    if (m < 0 || shift < 0) {
        throw DomainError("apply_Pm needs m >= 0 and shift >= 0");
    }
    if (m + shift > g.max_order) {
        throw OrderOverflowError("apply_Pm needs derivatives up to order " +
                                 std::to_string(m + shift) + " from " + g.spec);
    }
    double acc = 0.0;
    for (int l = 0; l <= m; ++l) {
        acc += binom(m, l) * g(t, l + shift);
    }
    return acc;
}

double Cm1_objective(int m, double c) {
    const double a = trmap::E_m_eval(c, m) + 1.0 / (c * c);
    const double b = std::pow(8.0, m) / std::pow(c, 2 * m + 2);
    return std::max(a, b);
}

double const_Cm1(int m) {
    if (m < 0) {
        throw DomainError("const_Cm1 needs m >= 0");
    }
    if (m == 0) {
        return 0.0;
    }
    const MinResult r = minimize_scan_golden([m](double c) { return Cm1_objective(m, c); },
                                             kEndInset, std::numbers::pi - kEndInset, kScanPoints);
    return std::numbers::pi * std::pow(2.0, 0.5 * m) * r.value;
}

double Cmu1_objective(double mu_prime, double c) {
    const int alpha = static_cast<int>(std::floor(mu_prime + 5.0));
    const double e1 = std::pow(2.0, 3.0 - mu_prime) * std::max(1.0, 1.0 / (alpha - mu_prime - 4.0));
    const double e2 = 8.0 * alpha / (alpha - 1.0);
    return e1 * theta3(c, mu_prime) + e2 * std::pow(c, 1.0 - alpha);
}

double const_Cmu1(double mu_prime) {
    if (!(mu_prime > -1.0 && mu_prime <= 0.0)) {
        throw DomainError("const_Cmu1 needs -1 < mu' <= 0");
    }
    const MinResult r =
        minimize_scan_golden([mu_prime](double c) { return Cmu1_objective(mu_prime, c); },
                             kEndInset, trmap::c0() - kEndInset, kScanPoints);
    return r.value;
}

BoundConstants const_chain(double mu) {
    static std::mutex lock;
    static std::map<double, BoundConstants> cache;
    {
        const std::lock_guard<std::mutex> guard(lock);
        const auto it = cache.find(mu);
        if (it != cache.end()) {
            return it->second;
        }
    }
    const BoundParams p = derive_shape(mu);
    BoundConstants c;
    c.Cm1 = const_Cm1(p.m);
    c.Cmu1 = const_Cmu1(mu - p.m);
    c.Cm = e_over_two_pi() * c.Cm1;
    c.Cmu2 = e_over_two_pi() * c.Cmu1;
    c.Cmu3 = c.Cm * std::pow(2.0, -mu + p.m);
    c.Cmu = std::max(c.Cmu2, c.Cmu3);
    const std::lock_guard<std::mutex> guard(lock);
    cache.emplace(mu, c);
    return c;
}

double bound_rhs(const Symbol& f, const SmoothCausalFunction& g, double kappa, double t) {
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("bound_rhs: time step must lie in (0, 1]");
    }
    if (!(t > 0.0)) {
        throw DomainError("bound_rhs: needs t > 0");
    }
    const BoundParams p = derive_params(f.mu());
    if (g.max_order < p.beta) {
        throw OrderOverflowError("bound_rhs: " + g.spec + " lacks derivatives of order " +
                                 std::to_string(p.beta));
    }
    if (g.identically_zero) {
        return 0.0;
    }
    const int top = p.m + p.alpha;
    const double i1 = integrate([&g, top](double tau) { return std::abs(g(tau, top)); }, 0.0, t,
                                kQuadRelTol, kQuadAbsFloor, 64);
    const int m = p.m;
    const double i2 = integrate(
        [&g, m](double tau) { return std::abs(apply_Pm(g, m, tau, m + 4)); }, 0.0, t,
        kQuadRelTol, kQuadAbsFloor, 64);
    const double x = 1.0 / t;
    const double c_of_x = f.cf()(std::min(x, 1.0) / 4.0) * p.constants.Cmu /
                          std::min(std::pow(x, p.epsilon), 1.0);
    return kappa * kappa * c_of_x * (i1 + i2);
}

}  // namespace trcq
