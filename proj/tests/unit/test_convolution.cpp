#include <doctest.h>

#include <cmath>
#include <sstream>

#include "trcq/convolution.hpp"
#include "trcq/errors.hpp"
#include "trcq/sampling.hpp"

using namespace trcq;

namespace {

CausalSignal random_signal(const Grid& grid, Eigen::Index dim, std::uint64_t seed) {
    Rng rng(seed);
    CausalSignal s;
    s.grid = grid;
    s.samples.resize(dim, static_cast<Eigen::Index>(grid.steps + 1));
    for (Eigen::Index j = 0; j < s.samples.cols(); ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            s.samples(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
    }
    return s;
}

double max_diff(const CausalSignal& a, const CausalSignal& b) {
    return (a.samples - b.samples).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("grid nodes") {
    const Grid g = make_grid(0.1, 20);
    CHECK(g.node(0) == 0.0);
    CHECK(std::abs(g.final_time() - 2.0) < 1e-15);
    CHECK_THROWS_AS(make_grid(0.0, 4), DomainError);
    CHECK_THROWS_AS(make_grid(1.5, 4), DomainError);
}

TEST_CASE("exactness of the integral and derivative tables") {
    const Grid grid = make_grid(0.1, 50);
    const CausalSignal lin = sample(ScalarFunction([](double t) { return t; }), grid);
    const CausalSignal sq = sample(ScalarFunction([](double t) { return t * t; }), grid);
    const CausalSignal integral = convolve_naive(cq_weights_closed(ClosedKind::integral, 0.1, 50), lin);
    const CausalSignal derivative = convolve_naive(cq_weights_closed(ClosedKind::derivative, 0.1, 50), sq);
    for (std::size_t n = 1; n <= 50; ++n) {
        const double t = grid.node(n);
        CHECK(std::abs(integral.samples(0, n) - 0.5 * t * t) <= 1e-12 * 0.5 * t * t);
        CHECK(std::abs(derivative.samples(0, n) - 2.0 * t) <= 1e-12 * 2.0 * t);
    }
}

TEST_CASE("derivative table is exact when nodes and samples are exact") {
    // kappa = 2^-7: every t_n and t_n^2 is representable, so only the sum can round.
    const double kappa = 1.0 / 128.0;
    const std::size_t steps = 1000;
    const Grid grid = make_grid(kappa, steps);
    const CausalSignal sq = sample(ScalarFunction([](double t) { return t * t; }), grid);
    const CausalSignal d = convolve_naive(cq_weights_closed(ClosedKind::derivative, kappa, steps), sq);
    for (std::size_t n = 1; n <= steps; ++n) {
        CHECK(d.samples(0, n).real() == 2.0 * grid.node(n));
    }
}

TEST_CASE("FFT and direct engines agree") {
    const Grid grid = make_grid(0.01, 700);
    for (const Symbol& f : {make_power(0.5), make_delay(1.0)}) {
        const WeightTable w = cq_weights_fft(f, 0.01, 700);
        const CausalSignal g = random_signal(grid, 1, 9);
        const CausalSignal a = convolve_naive(w, g);
        const CausalSignal b = convolve_fft(w, g);
        CHECK(max_diff(a, b) <= 1e-12 * (1.0 + a.samples.cwiseAbs().maxCoeff()));
    }
    Eigen::MatrixXd skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    const WeightTable w = cq_weights_fft(make_resolvent(skew, 0.0, CFModel{1.0, 1.0}), 0.01, 700);
    const CausalSignal g = random_signal(grid, 2, 10);
    const CausalSignal a = convolve_naive(w, g);
    CHECK(a.dim() == 2);
    CHECK(max_diff(a, convolve_fft(w, g)) <= 1e-12 * (1.0 + a.samples.cwiseAbs().maxCoeff()));
}

TEST_CASE("discrete convolution is linear") {
    const Grid grid = make_grid(0.05, 100);
    const WeightTable w = cq_weights_fft(make_power(0.5), 0.05, 100);
    const CausalSignal g1 = random_signal(grid, 1, 1);
    const CausalSignal g2 = random_signal(grid, 1, 2);
    CausalSignal combo = g1;
    const cplx a(2.0, -1.0);
    combo.samples = a * g1.samples + 3.0 * g2.samples;
    const CausalSignal lhs = convolve_fft(w, combo);
    const CausalSignal r1 = convolve_fft(w, g1);
    const CausalSignal r2 = convolve_fft(w, g2);
    CausalSignal rhs = r1;
    rhs.samples = a * r1.samples + 3.0 * r2.samples;
    CHECK(max_diff(lhs, rhs) <= 1e-12 * (1.0 + rhs.samples.cwiseAbs().maxCoeff()));
}

TEST_CASE("discrete convolution is shift invariant") {
    const Grid grid = make_grid(0.05, 100);
    const WeightTable w = cq_weights_fft(make_delay(0.5), 0.05, 100);
    const CausalSignal g = random_signal(grid, 1, 4);
    CausalSignal shifted = g;
    shifted.samples.setZero();
    const Eigen::Index k = 7;
    shifted.samples.rightCols(g.samples.cols() - k) = g.samples.leftCols(g.samples.cols() - k);
    const CausalSignal a = convolve_naive(w, g);
    const CausalSignal b = convolve_naive(w, shifted);
    for (Eigen::Index n = k; n < a.samples.cols(); ++n) {
        CHECK(std::abs(b.samples(0, n) - a.samples(0, n - k)) < 1e-13);
    }
    for (Eigen::Index n = 0; n < k; ++n) {
        CHECK(b.samples(0, n) == cplx(0.0, 0.0));
    }
}

TEST_CASE("identity weights reproduce the input") {
    const Grid grid = make_grid(0.1, 30);
    const CausalSignal g = random_signal(grid, 1, 5);
    CHECK(max_diff(convolve_naive(cq_weights_closed(ClosedKind::identity, 0.1, 30), g), g) == 0.0);
}

TEST_CASE("grid and shape mismatches are rejected") {
    const CausalSignal g = random_signal(make_grid(0.1, 10), 1, 6);
    CHECK_THROWS_AS(convolve_naive(cq_weights_closed(ClosedKind::identity, 0.1 + 1e-17 + 1e-16, 10), g),
                    GridMismatchError);
    CHECK_THROWS_AS(convolve_fft(cq_weights_closed(ClosedKind::identity, 0.1, 5), g), ShapeError);
    const CausalSignal g2 = random_signal(make_grid(0.1, 10), 2, 6);
    CHECK_THROWS_AS(convolve_naive(cq_weights_closed(ClosedKind::identity, 0.1, 10), g2), ShapeError);
}

TEST_CASE("errors against an exact solution and CSV output") {
    const Grid grid = make_grid(0.5, 2);
    const CausalSignal g = sample(ScalarFunction([](double t) { return t; }), grid);
    const std::vector<double> err = error_vs_exact(g, ScalarFunction([](double t) { return 2.0 * t; }));
    CHECK(err == std::vector<double>{0.0, 0.5, 1.0});
    std::ostringstream os;
    write_signal_csv(os, g);
    CHECK(os.str() == "n,t,re_0,im_0\n0,0,0,0\n1,0.5,0.5,0\n2,1,1,0\n");
}
