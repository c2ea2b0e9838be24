#include "trcq/value.hpp"

#include <algorithm>
#include <cmath>

namespace trcq {

double operator_norm(const Value& v) {
    if (v.size() == 0) {
        return 0.0;
    }
    if (v.rows() == 1 && v.cols() == 1) {
        return std::abs(v(0, 0));
    }
    if (v.rows() == 2 && v.cols() == 2) {
        // sigma_max^2 is the largest eigenvalue of A^H A:
        // (|A|_F^2 + sqrt(|A|_F^4 - 4 |det A|^2)) / 2.
        const double fro2 = v.squaredNorm();
        const double det = std::abs(v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0));
        const double disc = std::max(0.0, (fro2 - 2.0 * det) * (fro2 + 2.0 * det));
        return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
    }
    Eigen::JacobiSVD<Value> svd(v);
    return svd.singularValues()(0);
}

}  // namespace trcq
