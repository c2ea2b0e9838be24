#pragma once

#include <functional>
#include <string>

#include "trcq/sampling.hpp"

namespace trcq {

/// Scalar causal test function with analytic derivatives.
///
/// eval(t, k) returns the k-th derivative at t and 0 for t < 0. For t >= 0
/// the derivative is the one-sided limit from the right.
struct SmoothCausalFunction {
    std::string spec;
    std::function<double(double, int)> eval;
    int max_order = 0;
    /// Closed-form Laplace transform; empty when unknown.
    std::function<cplx(cplx)> laplace;
    /// Bound on int_{|w| > W} |G(sigma + i w)| dw as a function of W; empty when unknown.
    std::function<double(double)> laplace_tail;
    /// Time after which the function and its low-order derivatives are
    /// negligible at double precision; infinity for non-decaying functions.
    double support_end = 0.0;
    bool identically_zero = false;

    /// k-th derivative at t. Throws OrderOverflowError for k > max_order.
    double operator()(double t, int k = 0) const;
};

/// t^k e^{-t} for t >= 0.
SmoothCausalFunction make_polyexp(int k);
/// t^k for t >= 0.
SmoothCausalFunction make_monomial(int k);
SmoothCausalFunction make_zero();

/// "poly5exp" (= "polyexp:5"), "polyexp:k", "mono:k" or "zero".
/// Throws ParseError on malformed specs.
SmoothCausalFunction parse_g_spec(const std::string& spec);

}  // namespace trcq
