#pragma once

#include <string>

#include "trcq/convolution.hpp"
#include "trcq/smooth.hpp"
#include "trcq/symbols.hpp"

namespace trcq {

/// Reference solution t -> (f * g)(t) for supported (symbol, g) pairs:
///   delay:d with any g       -> g(t - d)
///   power:x with mono:k      -> Gamma(k+1) / Gamma(k+1-x) t^{k-x}
///   power:n (integer n >= 0) -> g^{(n)}
///   power:-1 with any g      -> int_0^t g
///   decay:a with any g       -> int_0^t e^{-a(t-tau)} g(tau) dtau
///   any symbol with zero     -> 0
/// Throws MissingExactSolutionError otherwise.
ScalarFunction exact_solution(const Symbol& f, const SmoothCausalFunction& g);

/// Human-readable list of the supported pairs.
std::string supported_exact_pairs();

}  // namespace trcq
