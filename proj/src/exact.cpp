#include "trcq/exact.hpp"

#include <cmath>
#include <cstdlib>

#include "trcq/errors.hpp"
#include "trcq/quadrature.hpp"

namespace trcq {

namespace {

constexpr double kRelTol = 1e-13;
constexpr double kAbsFloor = 1e-300;

struct ParsedSpec {
    std::string kind;
    double param = 0.0;
    bool ok = false;
};

ParsedSpec split_spec(const std::string& spec) {
    ParsedSpec out;
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        return out;
    }
    out.kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    char* end = nullptr;
    out.param = std::strtod(arg.c_str(), &end);
    out.ok = !arg.empty() && *end == '\0';
    return out;
}

// 1 / Gamma(x), zero at the poles.
double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        return 0.0;
    }
    return 1.0 / std::tgamma(x);
}

double integral_from_zero(const std::function<double(double)>& f, double t) {
    if (t <= 0.0) {
        return 0.0;
    }
    return integrate(f, 0.0, t, kRelTol, kAbsFloor, 64);
}

}  // namespace

std::string supported_exact_pairs() {
    return "delay:d with any g; power:x with mono:k; power:n (integer n >= 0) with any g; "
           "power:-1 with any g; decay:a with any g; any symbol with zero";
}

ScalarFunction exact_solution(const Symbol& f, const SmoothCausalFunction& g) {
    if (g.identically_zero) {
        return [](double) { return 0.0; };
    }
    const ParsedSpec sym = split_spec(f.spec());
    if (sym.ok && f.is_scalar()) {
        if (sym.kind == "delay") {
            const double d = sym.param;
            return [g, d](double t) { return g(t - d); };
        }
        if (sym.kind == "power") {
            const double mu = sym.param;
            const ParsedSpec gs = split_spec(g.spec);
            if (gs.ok && gs.kind == "mono") {
                const int k = static_cast<int>(gs.param);
                const double c = std::tgamma(k + 1.0) * reciprocal_gamma(k + 1.0 - mu);
                return [c, k, mu](double t) {
                    return t <= 0.0 || c == 0.0 ? 0.0 : c * std::pow(t, k - mu);
                };
            }
            if (mu >= 0.0 && mu == std::floor(mu) && mu <= g.max_order) {
                const int n = static_cast<int>(mu);
                return [g, n](double t) { return g(t, n); };
            }
            if (mu == -1.0) {
                return [g](double t) {
                    return integral_from_zero([&g](double tau) { return g(tau); }, t);
                };
            }
        }
        if (sym.kind == "decay") {
            const double a = sym.param;
            return [g, a](double t) {
                return integral_from_zero(
                    [&g, a, t](double tau) { return std::exp(-a * (t - tau)) * g(tau); }, t);
            };
        }
    }
    throw MissingExactSolutionError("no exact solution for (" + f.spec() + ", " + g.spec +
                                    "); supported: " + supported_exact_pairs());
}

}  // namespace trcq
