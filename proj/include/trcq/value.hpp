#pragma once

#include <Eigen/Dense>

#include "trcq/sampling.hpp"

namespace trcq {

/// Value of a symbol at one frequency: a small complex matrix (1x1 for scalars).
using Value = Eigen::MatrixXcd;
/// Element of the input or output space.
using Vector = Eigen::VectorXcd;

/// Operator 2-norm. Closed form for 1x1 and 2x2, Jacobi SVD beyond.
double operator_norm(const Value& v);

inline Value scalar_value(cplx z) {
    Value v(1, 1);
    v(0, 0) = z;
    return v;
}

}  // namespace trcq
