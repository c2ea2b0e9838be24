#include <doctest.h>

#include <cmath>
#include <numbers>

#include "golden.hpp"
#include "trcq/bounds.hpp"
#include "trcq/errors.hpp"
#include "trcq/trmap.hpp"

using namespace trcq;

TEST_CASE("parameter shape follows the exponent") {
    struct Row {
        double mu;
        int m, alpha, beta;
        double epsilon;
    };
    const Row rows[] = {{0, 0, 5, 5, 3},   {0.25, 1, 4, 6, 2.75}, {0.5, 1, 4, 6, 2.5},
                        {1, 1, 5, 6, 3},   {1.5, 2, 4, 8, 3.5},   {2, 2, 5, 8, 3},
                        {3, 3, 5, 10, 4}};
    for (const Row& r : rows) {
        const BoundParams p = derive_shape(r.mu);
        CHECK(p.m == r.m);
        CHECK(p.alpha == r.alpha);
        CHECK(p.beta == r.beta);
        CHECK(p.epsilon == r.epsilon);
        CHECK((p.alpha == 5) == (r.mu == p.m));
        CHECK(p.delta_shift > 0.0);
        CHECK(p.delta_shift <= 1.0);
    }
    CHECK_THROWS_AS(derive_shape(-0.5), DomainError);
    CHECK_THROWS_AS(derive_shape(std::nan("")), DomainError);
}

TEST_CASE("exponent lies in its bracket") {
    for (double mu = 0.0; mu <= 4.0; mu += 0.125) {
        const BoundParams p = derive_shape(mu);
        const double lo = std::max(2.0 * p.m - mu + 1.0, std::floor(mu) - mu + 3.0);
        const double top = std::max(p.m, 1);
        CHECK(p.epsilon == lo);
        CHECK(p.epsilon >= 1.0 + top);
        CHECK(p.epsilon <= 2.0 + top);
        CHECK(p.epsilon >= std::max(2.0, p.m + 1.0));
    }
}

TEST_CASE("integer-order constants match the high-precision oracle") {
    CHECK(const_Cm1(0) == 0.0);
    for (int m : {1, 2, 3}) {
        CHECK(rel_diff(const_Cm1(m), golden("Cm1:" + std::to_string(m))) <= 1e-9);
    }
    CHECK_THROWS_AS(const_Cm1(-1), DomainError);
}

TEST_CASE("fractional constants match the high-precision oracle") {
    CHECK(rel_diff(const_Cmu1(0.0), golden("Cmu1:0")) <= 1e-9);
    CHECK(rel_diff(const_Cmu1(-0.25), golden("Cmu1:-0.25")) <= 1e-9);
    CHECK(rel_diff(const_Cmu1(-0.5), golden("Cmu1:-0.5")) <= 1e-9);
    CHECK_THROWS_AS(const_Cmu1(-1.0), DomainError);
    CHECK_THROWS_AS(const_Cmu1(0.5), DomainError);
}

TEST_CASE("minimizers are locally optimal") {
    const double lo = 1e-2;
    for (int m : {1, 2, 3}) {
        const double best = const_Cm1(m) / (std::numbers::pi * std::pow(2.0, 0.5 * m));
        for (double c = lo; c < std::numbers::pi - lo; c += 0.01) {
            CHECK(Cm1_objective(m, c) >= best * (1.0 - 1e-12));
        }
    }
    for (double mp : {0.0, -0.5, -0.75}) {
        const double best = const_Cmu1(mp);
        for (double c = lo; c < trmap::c0() - lo; c += 0.01) {
            CHECK(Cmu1_objective(mp, c) >= best * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("constant chain") {
    const double scale = std::numbers::e / (2.0 * std::numbers::pi);
    for (double mu : {0.0, 0.5, 1.0, 2.5}) {
        const BoundConstants c = derive_params(mu).constants;
        const int m = static_cast<int>(std::ceil(mu));
        CHECK(c.Cm == scale * c.Cm1);
        CHECK(c.Cmu2 == scale * c.Cmu1);
        CHECK(std::abs(c.Cmu3 - c.Cm * std::pow(2.0, m - mu)) < 1e-15 * c.Cmu3 + 1e-300);
        CHECK(c.Cmu == std::max(c.Cmu2, c.Cmu3));
        CHECK(c.Cmu > 0.0);
    }
}

TEST_CASE("envelope functions") {
    const CFModel one{1.0, 0.0};
    CHECK(theta1(4.0, 0.0, one) == 1.0);
    CHECK(std::abs(theta1(0.5, -1.0, one) - 4.0) < 1e-15);
    CHECK(std::abs(theta2(1.0, 0.0, one) - 2.0) < 1e-15);
    CHECK(theta3(1.0, 0.0) == trmap::D_eval(1.0));
    CHECK(theta3(1.0, -0.5) > theta3(1.0, 0.0));
    CHECK_THROWS_AS(theta1(1.0, 0.5, one), DomainError);
    CHECK_THROWS_AS(theta3(2.5, 0.0), DomainError);
}

TEST_CASE("shifted operator on polyexp") {
    // e^t g = t^k, so the operator gives e^{-t} k! / (k - m)! t^{k - m}.
    const SmoothCausalFunction g = make_polyexp(6);
    for (int m : {0, 1, 2, 3}) {
        for (double t : {0.5, 2.0, 7.0}) {
            const double expect = std::exp(-t) * std::tgamma(7.0) / std::tgamma(7.0 - m) * std::pow(t, 6 - m);
            CHECK(std::abs(apply_Pm(g, m, t) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
        }
    }
    CHECK_THROWS_AS(apply_Pm(g, 4, 1.0, 100), OrderOverflowError);
}

TEST_CASE("bound right-hand side") {
    const Symbol f = make_delay(1.0);
    const SmoothCausalFunction g = make_polyexp(5);
    const double a = bound_rhs(f, g, 0.1, 2.0);
    const double b = bound_rhs(f, g, 0.05, 2.0);
    CHECK(std::abs(b / a - 0.25) < 1e-14);
    CHECK(bound_rhs(f, make_zero(), 0.1, 2.0) == 0.0);
    double prev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double v = bound_rhs(f, g, 0.1, t);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(bound_rhs(f, g, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(bound_rhs(f, g, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(bound_rhs(make_power(-1.0), g, 0.1, 1.0), DomainError);
}
