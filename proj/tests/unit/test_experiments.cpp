#include <doctest.h>

#include <cmath>

#include "trcq/errors.hpp"
#include "trcq/experiments.hpp"

using namespace trcq;

TEST_CASE("step counts") {
    CHECK(steps_to(2.0, 0.1) == 20);
    CHECK(steps_to(100.0, 0.05) == 2000);
    CHECK_THROWS_AS(steps_to(1.05, 0.1), DomainError);
    CHECK_THROWS_AS(steps_to(1e7, 1e-3), DomainError);
    CHECK_THROWS_AS(steps_to(-1.0, 0.1), DomainError);
}

TEST_CASE("closed tables are used where available") {
    CHECK(weights_for(make_power(1.0), 0.1, 4).fft_size == 0);
    CHECK(weights_for(make_power(-1.0), 0.1, 4).fft_size == 0);
    CHECK(weights_for(make_power(0.5), 0.1, 4).fft_size > 0);
}

TEST_CASE("running maximum of errors") {
    const std::vector<double> err{0.0, 3.0, 1.0, 5.0};
    CHECK(max_error_up_to(err, 0.5, 0.9) == 3.0);
    CHECK(max_error_up_to(err, 0.5, 1.0) == 3.0);
    CHECK(max_error_up_to(err, 0.5, 1.5) == 5.0);
}

TEST_CASE("second-order convergence for the delay symbol") {
    const auto rows = run_converge(make_delay(1.0), make_polyexp(5), 2.0, {0.1, 0.05, 0.025});
    REQUIRE(rows.size() == 3);
    CHECK(std::isnan(rows[0].eoc));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].eoc > 1.8);
        CHECK(rows[i].eoc < 2.2);
        CHECK_FALSE(rows[i].exact);
    }
}

TEST_CASE("integration of a linear function is exact") {
    for (const auto& r : run_converge(make_power(-1.0), make_monomial(1), 2.0, {0.1, 0.05})) {
        CHECK(r.exact);
        CHECK(r.error <= 1e-12);
    }
}

TEST_CASE("convergence input validation") {
    CHECK_THROWS_AS(run_converge(make_delay(1.0), make_polyexp(5), 2.0, {0.05, 0.1}), DomainError);
    CHECK_THROWS_AS(run_converge(make_delay(1.0), make_polyexp(5), 2.0, {}), DomainError);
    CHECK_THROWS_AS(run_converge(make_delay(1.0), make_polyexp(5), 2.0, {2.0}), DomainError);
    CHECK_THROWS_AS(run_converge(make_power(0.3), make_polyexp(5), 2.0, {0.1}), MissingExactSolutionError);
}

TEST_CASE("bound rows are sorted and zero data gives zero ratios") {
    const auto rows = run_bound(make_delay(1.0), make_zero(), {2.0, 1.0}, {0.1, 0.05});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].t == 1.0);
    CHECK(rows[0].kappa == 0.05);
    CHECK(rows[3].t == 2.0);
    for (const auto& r : rows) {
        CHECK(r.observed == 0.0);
        CHECK(r.bound == 0.0);
        CHECK(r.ratio == 0.0);
    }
}

TEST_CASE("slope fits") {
    CHECK(std::abs(fit_slope({0, 1, 2}, {1, 3, 5}) - 2.0) < 1e-15);
    CHECK_THROWS_AS(fit_slope({1}, {1}), DegenerateDataError);
    CHECK_THROWS_AS(fit_slope({1, 1}, {1, 2}), DegenerateDataError);
}

TEST_CASE("long-time run needs at least two times") {
    CHECK_THROWS_AS(run_longtime(make_delay(1.0), make_polyexp(5), 0.05, 10.0, 1), DegenerateDataError);
    const LongtimeResult r = run_longtime(make_delay(1.0), make_polyexp(5), 0.1, 20.0, 6, 4.0);
    CHECK(r.times.size() == 6);
    CHECK(r.times.back() == 20.0);
    CHECK(std::abs(r.rate) < 0.01);
    CHECK(r.times.front() == 4.0);
}
