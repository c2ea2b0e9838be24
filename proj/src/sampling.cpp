#include "trcq/sampling.hpp"

#include <cmath>
#include <numbers>

namespace trcq {

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

cplx HalfPlaneSampler::operator()(Rng& rng) const {
    const double r = rng.log_uniform(min_modulus, max_modulus);
    const double half = std::numbers::pi / 2 - arg_inset;
    const double theta = rng.uniform(-half, half);
    return std::polar(r, theta);
}

}  // namespace trcq
