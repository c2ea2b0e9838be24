#include "trcq/smooth.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "trcq/errors.hpp"

namespace trcq {

namespace {

constexpr int kMaxOrder = 40;

// n! / (n - i)! as a double.
double falling(int n, int i) {
    double p = 1.0;
    for (int j = 0; j < i; ++j) {
        p *= n - j;
    }
    return p;
}

double binom(int n, int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) {
        c = c * (n - k + j) / j;
    }
    return c;
}

int parse_order(const std::string& text, std::size_t column) {
    if (text.empty()) {
        throw ParseError("expected a non-negative integer", 1, column);
    }
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (*end != '\0' || v < 0 || v > kMaxOrder) {
        throw ParseError("expected an integer in [0, " + std::to_string(kMaxOrder) + "]", 1,
                         column);
    }
    return static_cast<int>(v);
}

}  // namespace

double SmoothCausalFunction::operator()(double t, int k) const {
    if (k < 0 || k > max_order) {
        throw OrderOverflowError("derivative of order " + std::to_string(k) + " requested from " +
                                 spec + " (max " + std::to_string(max_order) + ")");
    }
    if (t < 0.0) {
        return 0.0;
    }
    return eval(t, k);
}

SmoothCausalFunction make_polyexp(int k) {
    if (k < 0 || k > kMaxOrder) {
        throw DomainError("make_polyexp: power out of range");
    }
    SmoothCausalFunction g;
    g.spec = "polyexp:" + std::to_string(k);
    g.max_order = kMaxOrder;
    // (t^k e^{-t})^{(j)} = e^{-t} sum_i C(j,i) (-1)^{j-i} k!/(k-i)! t^{k-i}
    g.eval = [k](double t, int j) {
        double acc = 0.0;
        for (int i = 0; i <= std::min(j, k); ++i) {
            const double sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom(j, i) * falling(k, i) * std::pow(t, k - i);
        }
        return std::exp(-t) * acc;
    };
    const double kfact = std::tgamma(k + 1.0);
    g.laplace = [k, kfact](cplx s) { return kfact / std::pow(s + 1.0, k + 1); };
    // |G(sigma + i w)| <= k! / |w|^{k+1}
    g.laplace_tail = [k, kfact](double w) {
        return k == 0 ? std::numeric_limits<double>::infinity()
                      : 2.0 * kfact / (k * std::pow(w, k));
    };
    g.support_end = 80.0 + 3.0 * k;
    return g;
}

SmoothCausalFunction make_monomial(int k) {
    if (k < 0 || k > kMaxOrder) {
        throw DomainError("make_monomial: power out of range");
    }
    SmoothCausalFunction g;
    g.spec = "mono:" + std::to_string(k);
    g.max_order = kMaxOrder;
    g.eval = [k](double t, int j) {
        return j > k ? 0.0 : falling(k, j) * std::pow(t, k - j);
    };
    const double kfact = std::tgamma(k + 1.0);
    g.laplace = [k, kfact](cplx s) { return kfact / std::pow(s, k + 1); };
    g.support_end = std::numeric_limits<double>::infinity();
    return g;
}

SmoothCausalFunction make_zero() {
    SmoothCausalFunction g;
    g.spec = "zero";
    g.max_order = kMaxOrder;
    g.eval = [](double, int) { return 0.0; };
    g.laplace = [](cplx) { return cplx(0.0, 0.0); };
    g.laplace_tail = [](double) { return 0.0; };
    g.support_end = 0.0;
    g.identically_zero = true;
    return g;
}

SmoothCausalFunction parse_g_spec(const std::string& spec) {
    if (spec == "poly5exp") {
        SmoothCausalFunction g = make_polyexp(5);
        g.spec = "poly5exp";
        return g;
    }
    if (spec == "zero") {
        return make_zero();
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ParseError("unknown test function '" + spec + "'", 1, 1);
    }
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "polyexp") {
        return make_polyexp(parse_order(arg, colon + 2));
    }
    if (kind == "mono") {
        return make_monomial(parse_order(arg, colon + 2));
    }
    throw ParseError("unknown test function kind '" + kind + "'", 1, 1);
}

}  // namespace trcq
