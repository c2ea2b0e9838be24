#include <doctest.h>

#include <cmath>

#include "trcq/errors.hpp"
#include "trcq/exact.hpp"
#include "trcq/quadrature.hpp"
#include "trcq/smooth.hpp"

using namespace trcq;

TEST_CASE("polyexp derivatives match central differences") {
    const SmoothCausalFunction g = make_polyexp(5);
    CHECK(g.spec == "polyexp:5");
    CHECK(g.max_order >= 10);
    const double h = 1e-4;
    for (double t : {0.3, 1.0, 4.0, 9.0}) {
        for (int k = 0; k < 8; ++k) {
            const double fd = (g(t + h, k) - g(t - h, k)) / (2.0 * h);
            CHECK(std::abs(fd - g(t, k + 1)) <= 1e-6 * (1.0 + std::abs(g(t, k + 1))));
        }
    }
    CHECK(g(-1.0, 3) == 0.0);
    CHECK(std::abs(g(2.0) - 32.0 * std::exp(-2.0)) < 1e-14);
    CHECK_THROWS_AS(g(1.0, g.max_order + 1), OrderOverflowError);
}

TEST_CASE("polyexp transform") {
    const SmoothCausalFunction g = make_polyexp(3);
    for (double re : {0.5, 2.0}) {
        const double numeric = integrate([&](double t) { return std::exp(-re * t) * g(t); }, 0.0, 200.0, 1e-12);
        CHECK(std::abs(g.laplace(cplx(re, 0.0)).real() - numeric) < 1e-10);
    }
    CHECK(std::abs(g.laplace(cplx(1.0, 2.0)) - 6.0 / std::pow(cplx(2.0, 2.0), 4)) < 1e-15);
}

TEST_CASE("monomials and zero") {
    const SmoothCausalFunction m = make_monomial(7);
    CHECK(m(2.0) == 128.0);
    CHECK(m(2.0, 7) == 5040.0);
    CHECK(m(2.0, 8) == 0.0);
    const SmoothCausalFunction z = make_zero();
    CHECK(z.identically_zero);
    CHECK(z(3.0, 4) == 0.0);
    CHECK(parse_g_spec("poly5exp")(1.0) == make_polyexp(5)(1.0));
    CHECK(parse_g_spec("mono:2")(3.0) == 9.0);
    CHECK_THROWS_AS(parse_g_spec("mono:"), ParseError);
    CHECK_THROWS_AS(parse_g_spec("sin"), ParseError);
    CHECK_THROWS_AS(parse_g_spec("polyexp:-1"), ParseError);
}

TEST_CASE("exact solutions") {
    const SmoothCausalFunction g = make_polyexp(5);
    const ScalarFunction shift = exact_solution(make_delay(1.0), g);
    CHECK(shift(0.5) == 0.0);
    CHECK(std::abs(shift(2.5) - g(1.5)) < 1e-15);

    const ScalarFunction half = exact_solution(make_power(0.5), make_monomial(7));
    CHECK(std::abs(half(2.0) - std::tgamma(8.0) / std::tgamma(7.5) * std::pow(2.0, 6.5)) < 1e-10);

    const ScalarFunction deriv = exact_solution(make_power(2.0), g);
    CHECK(std::abs(deriv(1.3) - g(1.3, 2)) < 1e-15);

    const ScalarFunction integral = exact_solution(make_power(-1.0), make_monomial(2));
    CHECK(std::abs(integral(3.0) - 9.0) < 1e-11);

    // g = t: int_0^t e^{-a (t - s)} s ds = t / a - (1 - e^{-a t}) / a^2.
    const ScalarFunction decay = exact_solution(make_decay(2.0), make_monomial(1));
    CHECK(std::abs(decay(1.5) - (0.75 - (1.0 - std::exp(-3.0)) / 4.0)) < 1e-11);

    CHECK(exact_solution(make_power(0.3), make_zero())(2.0) == 0.0);
    CHECK_THROWS_AS(exact_solution(make_power(0.3), g), MissingExactSolutionError);
    CHECK_FALSE(supported_exact_pairs().empty());
}
