#include "trcq/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "trcq/errors.hpp"
#include "trcq/fft.hpp"

namespace trcq {

namespace {

void check_compatible(const WeightTable& w, const CausalSignal& g) {
    // Bit-identical comparison: a step mismatch must never pass silently.
    if (w.kappa != g.grid.kappa) {
        throw GridMismatchError("weight table and signal use different time steps");
    }
    if (w.count() < g.grid.steps + 1) {
        throw ShapeError("weight table is shorter than the signal");
    }
    if (w.cols != g.dim()) {
        throw ShapeError("signal dimension does not match the symbol's input space");
    }
    if (g.samples.cols() != static_cast<Eigen::Index>(g.grid.steps + 1)) {
        throw ShapeError("signal length does not match its grid");
    }
}

// Sum of products evaluated as if in twice the working precision: every
// product is split exactly (Dekker) and every addition error is carried.
struct CompensatedDot {
    double sum = 0.0;
    double carry = 0.0;

    static void split(double a, double& hi, double& lo) {
        constexpr double kSplitter = 134217729.0;  // 2^27 + 1
        const double c = kSplitter * a;
        hi = c - (c - a);
        lo = a - hi;
    }

    void add_product(double a, double b) {
        const double p = a * b;
        double ah = 0.0;
        double al = 0.0;
        double bh = 0.0;
        double bl = 0.0;
        split(a, ah, al);
        split(b, bh, bl);
        const double e = al * bl - (((p - ah * bh) - al * bh) - ah * bl);
        const double t = sum + p;
        const double z = t - sum;
        carry += (sum - (t - z)) + (p - z) + e;
        sum = t;
    }

    double value() const { return sum + carry; }
};

bool is_real(const WeightTable& w) {
    return std::all_of(w.values.begin(), w.values.end(),
                       [](const Value& v) { return v.imag().isZero(0.0); });
}

}  // namespace

Grid make_grid(double kappa, std::size_t steps) {
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("grid step must lie in (0, 1]");
    }
    return Grid{kappa, steps};
}

CausalSignal sample(const VectorFunction& fn, const Grid& grid) {
    CausalSignal out;
    out.grid = grid;
    for (std::size_t n = 0; n <= grid.steps; ++n) {
        const Vector v = fn(grid.node(n));
        if (n == 0) {
            out.samples.resize(v.size(), static_cast<Eigen::Index>(grid.steps + 1));
        } else if (v.size() != out.samples.rows()) {
            throw ShapeError("sampled function changed dimension");
        }
        out.samples.col(static_cast<Eigen::Index>(n)) = v;
    }
    return out;
}

CausalSignal sample(const ScalarFunction& fn, const Grid& grid) {
    CausalSignal out;
    out.grid = grid;
    out.samples.resize(1, static_cast<Eigen::Index>(grid.steps + 1));
    for (std::size_t n = 0; n <= grid.steps; ++n) {
        out.samples(0, static_cast<Eigen::Index>(n)) = fn(grid.node(n));
    }
    return out;
}

CausalSignal convolve_naive(const WeightTable& w, const CausalSignal& g) {
    check_compatible(w, g);
    const std::size_t count = g.grid.steps + 1;
    const Eigen::Index rows = w.rows;
    const Eigen::Index cols = w.cols;
    const bool real = is_real(w) && g.samples.imag().isZero(0.0);
    CausalSignal out;
    out.grid = g.grid;
    out.samples.setZero(rows, static_cast<Eigen::Index>(count));
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (std::size_t n = 0; n < count; ++n) {
            CompensatedDot re;
            CompensatedDot im;
            for (Eigen::Index j = 0; j < cols; ++j) {
                for (std::size_t m = 0; m <= n; ++m) {
                    const cplx a = w.values[n - m](i, j);
                    const cplx b = g.samples(j, static_cast<Eigen::Index>(m));
                    re.add_product(a.real(), b.real());
                    if (!real) {
                        re.add_product(-a.imag(), b.imag());
                        im.add_product(a.real(), b.imag());
                        im.add_product(a.imag(), b.real());
                    }
                }
            }
            out.samples(i, static_cast<Eigen::Index>(n)) = cplx(re.value(), im.value());
        }
    }
    return out;
}

CausalSignal convolve_fft(const WeightTable& w, const CausalSignal& g) {
    using Ext = ExtendedFftPlan::Complex;
    check_compatible(w, g);
    const std::size_t count = g.grid.steps + 1;
    const std::size_t steps = g.grid.steps;
    // Products with index sum >= size wrap around; for size >= 2 N only
    // w_N g_N can, and it lands on output 0, where it is removed below.
    const std::size_t size = next_power_of_two(std::max<std::size_t>(2 * steps, 1));
    const bool wraps = steps > 0 && size == 2 * steps;
    const ExtendedFftPlan plan(size);
    const Eigen::Index rows = w.rows;
    const Eigen::Index cols = w.cols;

    CausalSignal out;
    out.grid = g.grid;
    out.samples.setZero(rows, static_cast<Eigen::Index>(count));

    // Extended precision: derivative-type weights are large and alternate, and the
    // normwise FFT error would otherwise swamp the small, cancelled output.
    std::vector<std::vector<Ext>> signal_hat(static_cast<std::size_t>(cols));
    for (Eigen::Index j = 0; j < cols; ++j) {
        auto& buf = signal_hat[static_cast<std::size_t>(j)];
        buf.assign(size, Ext(0, 0));
        for (std::size_t m = 0; m < count; ++m) {
            const cplx v = g.samples(j, static_cast<Eigen::Index>(m));
            buf[m] = Ext(v.real(), v.imag());
        }
        plan.forward(buf);
    }

    std::vector<Ext> acc(size);
    std::vector<Ext> kernel(size);
    for (Eigen::Index i = 0; i < rows; ++i) {
        std::fill(acc.begin(), acc.end(), Ext(0, 0));
        for (Eigen::Index j = 0; j < cols; ++j) {
            std::fill(kernel.begin(), kernel.end(), Ext(0, 0));
            for (std::size_t m = 0; m < count; ++m) {
                const cplx v = w.values[m](i, j);
                kernel[m] = Ext(v.real(), v.imag());
            }
            plan.forward(kernel);
            const auto& sh = signal_hat[static_cast<std::size_t>(j)];
            for (std::size_t k = 0; k < size; ++k) {
                const Ext a = kernel[k];
                const Ext b = sh[k];
                acc[k] += Ext(a.real() * b.real() - a.imag() * b.imag(),
                              a.real() * b.imag() + a.imag() * b.real());
            }
        }
        plan.inverse(acc);
        if (wraps) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                const cplx a = w.values[steps](i, j);
                const cplx b = g.samples(j, static_cast<Eigen::Index>(steps));
                acc[0] -= Ext(a.real(), a.imag()) * Ext(b.real(), b.imag());
            }
        }
        for (std::size_t n = 0; n < count; ++n) {
            out.samples(i, static_cast<Eigen::Index>(n)) =
                cplx(static_cast<double>(acc[n].real()), static_cast<double>(acc[n].imag()));
        }
    }
    return out;
}

std::vector<double> error_vs_exact(const CausalSignal& computed, const VectorFunction& exact) {
    std::vector<double> err(computed.grid.steps + 1);
    for (std::size_t n = 0; n <= computed.grid.steps; ++n) {
        const Vector ref = exact(computed.grid.node(n));
        if (ref.size() != computed.dim()) {
            throw ShapeError("exact solution has the wrong dimension");
        }
        err[n] = (computed.at(n) - ref).norm();
    }
    return err;
}

std::vector<double> error_vs_exact(const CausalSignal& computed, const ScalarFunction& exact) {
    if (computed.dim() != 1) {
        throw ShapeError("scalar exact solution for a vector signal");
    }
    std::vector<double> err(computed.grid.steps + 1);
    for (std::size_t n = 0; n <= computed.grid.steps; ++n) {
        err[n] = std::abs(computed.samples(0, static_cast<Eigen::Index>(n)) -
                          exact(computed.grid.node(n)));
    }
    return err;
}

void write_signal_csv(std::ostream& os, const CausalSignal& signal) {
    os << "n,t";
    for (Eigen::Index c = 0; c < signal.dim(); ++c) {
        os << ",re_" << c << ",im_" << c;
    }
    os << '\n';
    char buf[64];
    for (std::size_t n = 0; n <= signal.grid.steps; ++n) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g", n, signal.grid.node(n));
        os << buf;
        for (Eigen::Index c = 0; c < signal.dim(); ++c) {
            const cplx v = signal.samples(c, static_cast<Eigen::Index>(n));
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g", v.real(), v.imag());
            os << buf;
        }
        os << '\n';
    }
}

}  // namespace trcq
