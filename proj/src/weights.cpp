#include "trcq/weights.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "trcq/errors.hpp"
#include "trcq/fft.hpp"
#include "trcq/trmap.hpp"

namespace trcq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_kappa(double kappa) {
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("time step must lie in (0, 1]");
    }
}

}  // namespace

std::vector<cplx> WeightTable::entry(Eigen::Index i, Eigen::Index j) const {
    std::vector<cplx> out(values.size());
    for (std::size_t m = 0; m < values.size(); ++m) {
        out[m] = values[m](i, j);
    }
    return out;
}

std::size_t default_fft_size(std::size_t steps) { return next_power_of_two(8 * (steps + 1)); }

double contour_radius(std::size_t fft_size, std::size_t steps) {
    return std::pow(kEps, 1.0 / static_cast<double>(fft_size + steps));
}

WeightTable cq_weights_fft(const Symbol& f, double kappa, std::size_t steps,
                           std::size_t fft_size) {
    check_kappa(kappa);
    if (fft_size == 0) {
        fft_size = default_fft_size(steps);
    }
    if (fft_size < steps + 1) {
        throw ShapeError("fft_size must be at least N + 1");
    }
    if (!is_power_of_two(fft_size)) {
        throw ShapeError("fft_size must be a power of two");
    }
    const std::size_t L = fft_size;
    const double rho = contour_radius(L, steps);
    const Eigen::Index rows = f.rows();
    const Eigen::Index cols = f.cols();

    // Node values, one sequence per matrix entry.
    std::vector<std::vector<cplx>> samples(static_cast<std::size_t>(rows * cols),
                                           std::vector<cplx>(L));
    double max_norm = 0.0;
    const bool mirror = f.real_kernel();
    const std::size_t last = mirror ? L / 2 : L - 1;
    for (std::size_t l = 0; l <= last; ++l) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(L);
        const cplx zeta = std::polar(rho, theta);
        const cplx s = trmap::delta_char(zeta) / kappa;
        if (f.is_scalar()) {
            const cplx v = f.scalar(s);
            max_norm = std::max(max_norm, std::abs(v));
            samples[0][l] = v;
            if (mirror && l != 0 && l != L - l) {
                samples[0][L - l] = std::conj(v);
            }
            continue;
        }
        const Value v = f(s);
        max_norm = std::max(max_norm, operator_norm(v));
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                auto& seq = samples[static_cast<std::size_t>(i * cols + j)];
                seq[l] = v(i, j);
                if (mirror && l != 0 && l != L - l) {
                    seq[L - l] = std::conj(v(i, j));
                }
            }
        }
    }

    const FftPlan plan(L);
    WeightTable table;
    table.kappa = kappa;
    table.radius = rho;
    table.fft_size = L;
    table.rows = rows;
    table.cols = cols;
    table.values.assign(steps + 1, Value::Zero(rows, cols));
    const double log_rho = std::log(rho);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            auto& seq = samples[static_cast<std::size_t>(i * cols + j)];
            plan.forward(seq);
            for (std::size_t m = 0; m <= steps; ++m) {
                const double scale = std::exp(-static_cast<double>(m) * log_rho) / static_cast<double>(L);
                table.values[m](i, j) = seq[m] * scale;
            }
        }
    }
    const double alias = std::pow(rho, static_cast<double>(L));
    const double roundoff = kEps * std::log2(static_cast<double>(L)) *
                            std::exp(-static_cast<double>(steps) * log_rho);
    table.accuracy_estimate = max_norm * (alias + roundoff);
    return table;
}

ClosedKind parse_closed_kind(const std::string& name) {
    if (name == "identity") {
        return ClosedKind::identity;
    }
    if (name == "derivative") {
        return ClosedKind::derivative;
    }
    if (name == "integral") {
        return ClosedKind::integral;
    }
    throw ParseError("unknown closed-form table '" + name + "'", 1, 1);
}

WeightTable cq_weights_closed(ClosedKind kind, double kappa, std::size_t steps) {
    check_kappa(kappa);
    WeightTable table;
    table.kappa = kappa;
    table.values.assign(steps + 1, Value::Zero(1, 1));
    for (std::size_t m = 0; m <= steps; ++m) {
        double w = 0.0;
        switch (kind) {
            case ClosedKind::identity:
                w = m == 0 ? 1.0 : 0.0;
                break;
            case ClosedKind::derivative:
                w = m == 0 ? 2.0 / kappa : (m % 2 == 0 ? 4.0 : -4.0) / kappa;
                break;
            case ClosedKind::integral:
                w = m == 0 ? 0.5 * kappa : kappa;
                break;
        }
        table.values[m](0, 0) = w;
    }
    return table;
}

double compare_weight_tables(const WeightTable& a, const WeightTable& b) {
    if (a.kappa != b.kappa) {
        throw GridMismatchError("weight tables were built for different time steps");
    }
    if (a.count() != b.count() || a.rows != b.rows || a.cols != b.cols) {
        throw ShapeError("weight tables differ in length or dimension");
    }
    double worst = 0.0;
    for (std::size_t m = 0; m < a.count(); ++m) {
        worst = std::max(worst, operator_norm(a.values[m] - b.values[m]));
    }
    return worst;
}

void write_weights_csv(std::ostream& os, const WeightTable& table) {
    char buf[96];
    for (Eigen::Index i = 0; i < table.rows; ++i) {
        for (Eigen::Index j = 0; j < table.cols; ++j) {
            os << "# entry " << i << ',' << j << '\n' << "m,re,im\n";
            for (std::size_t m = 0; m < table.count(); ++m) {
                const cplx w = table.values[m](i, j);
                std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", m, w.real(), w.imag());
                os << buf;
            }
        }
    }
}

}  // namespace trcq
