#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "trcq/errors.hpp"
#include "trcq/fft.hpp"
#include "trcq/quadrature.hpp"
#include "trcq/report.hpp"
#include "trcq/sampling.hpp"

using namespace trcq;

TEST_CASE("power-of-two helpers") {
    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(1024));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(12));
    CHECK(next_power_of_two(1) == 1);
    CHECK(next_power_of_two(9) == 16);
    CHECK(next_power_of_two(16) == 16);
}

TEST_CASE("FFT agrees with the direct transform and inverts") {
    Rng rng(7);
    for (std::size_t n : {1u, 2u, 8u, 64u, 256u}) {
        std::vector<cplx> x(n);
        for (auto& v : x) {
            v = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        std::vector<cplx> y = x;
        FftPlan plan(n);
        plan.forward(y);
        for (std::size_t k = 0; k < n; ++k) {
            cplx acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k % n) / double(n));
            }
            CHECK(std::abs(acc - y[k]) < 1e-12 * double(n));
        }
        plan.inverse(y);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(std::abs(y[j] - x[j]) < 1e-14 * double(n));
        }
    }
    CHECK_THROWS_AS(FftPlan(12), ShapeError);
}

TEST_CASE("adaptive Simpson") {
    const QuadResult r = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) < 1e-11);
    CHECK(std::abs(integrate([](double x) { return std::exp(-x); }, 0.0, 50.0, 1e-12) - 1.0) < 1e-11);
    CHECK(integrate([](double) { return 0.0; }, 0.0, 1.0, 1e-10) == 0.0);
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12), ConvergenceError);
}

TEST_CASE("scan plus golden-section minimizer") {
    const MinResult r = minimize_scan_golden([](double x) { return (x - 2.0) * (x - 2.0) + 1.0; }, 0.01, 3.0);
    CHECK(std::abs(r.x - 2.0) < 1e-6);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    // Two local minima; the scan has to find the deeper one.
    const auto wavy = [](double x) { return std::cos(3.0 * x) + 0.1 * x; };
    const MinResult w = minimize_scan_golden(wavy, 0.1, 5.0);
    for (double x = 0.1; x <= 5.0; x += 1e-3) {
        CHECK(w.value <= wavy(x) + 1e-12);
    }
}

TEST_CASE("seeded generator is reproducible") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform01();
        CHECK(u == b.uniform01());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        const double v = c.log_uniform(1e-3, 1e3);
        CHECK(v >= 1e-3);
        CHECK(v <= 1e3);
    }
}

TEST_CASE("half-plane sampler stays in the open right half plane") {
    Rng rng(3);
    HalfPlaneSampler sampler;
    for (int i = 0; i < 10000; ++i) {
        const cplx s = sampler(rng);
        CHECK(s.real() > 0.0);
        CHECK(std::abs(s) >= 1e-3 * (1 - 1e-12));
        CHECK(std::abs(s) <= 1e3 * (1 + 1e-12));
    }
}

TEST_CASE("report bookkeeping and CSV") {
    VerificationReport leaf;
    leaf.suite = "demo.a";
    leaf.seed = 5;
    CHECK_FALSE(leaf.record(1.0, 2.0, {{"x", 1}}));
    CHECK(leaf.record(3.0, 2.0, {{"x", 2}}));
    CHECK_FALSE(leaf.record(2.0 + 1e-13, 2.0, {{"x", 3}}));
    CHECK(leaf.violations == 1);
    CHECK(leaf.worst_margin == -1.0);
    CHECK(leaf.worst_point["x"] == 2);

    VerificationReport agg;
    agg.suite = "demo";
    agg.seed = 5;
    agg.absorb(leaf);
    CHECK(agg.violations == 1);
    CHECK(agg.samples == 3);
    CHECK(agg.worst_point["part"] == "demo.a");
    CHECK_FALSE(agg.passed());

    std::ostringstream os;
    write_report_rows(os, agg);
    const std::string text = os.str();
    CHECK(text.find("demo.a,3,5,1,-1,\"{\"\"x\"\":2}\"") != std::string::npos);
    CHECK(text.find("\ndemo,3,5,1,-1,") != std::string::npos);
}

TEST_CASE("NaN samples count as violations") {
    VerificationReport r;
    CHECK(r.record(std::nan(""), 1.0, {}));
    CHECK(r.violations == 1);
    CHECK(std::isnan(r.worst_margin));
}

TEST_CASE("a NaN worst point is not displaced by later samples") {
    VerificationReport r;
    r.record(std::nan(""), 1.0, {{"i", 0}});
    r.record(5.0, 1.0, {{"i", 1}});
    CHECK(r.worst_point["i"] == 0);
    CHECK(r.violations == 2);
}
