#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "trcq/errors.hpp"
#include "trcq/symbols.hpp"
#include "trcq/trmap.hpp"

using namespace trcq;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("growth model") {
    const CFModel cf{2.0, 1.5};
    CHECK(cf(4.0) == 2.0);
    CHECK(std::abs(cf(0.25) - 16.0) < 1e-12);
    CHECK_THROWS_AS(cf(0.0), DomainError);
}

TEST_CASE("power symbol on the principal branch") {
    const Symbol half = make_power(0.5);
    CHECK(std::abs(half.scalar(cplx(0.0 + 1e-300, 1.0)) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
    CHECK(std::abs(half.scalar(4.0) - 2.0) < 1e-15);
    CHECK(make_power(1.0).scalar(cplx(2.0, 3.0)) == cplx(2.0, 3.0));
    CHECK(make_power(0.0).scalar(cplx(2.0, 3.0)) == cplx(1.0, 0.0));
    CHECK(std::abs(make_power(-1.0).scalar(cplx(0.0 + 1e-300, 2.0)) - cplx(0.0, -0.5)) < 1e-15);
    CHECK(half.spec() == "power:0.5");
    CHECK(make_power(-1.0).spec() == "power:-1");
    CHECK(half.real_kernel());
}

TEST_CASE("evaluation outside the half plane is rejected") {
    const Symbol f = make_power(0.5);
    CHECK_THROWS_AS(f(cplx(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(f(cplx(-1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(f(cplx(std::nan(""), 0.0)), DomainError);
    CHECK_THROWS_AS(make_delay(-1.0), DomainError);
    CHECK_THROWS_AS(make_decay(0.0), DomainError);
}

TEST_CASE("delay and decay") {
    const cplx s(0.7, -2.0);
    CHECK(std::abs(make_delay(1.5).scalar(s) - std::exp(-1.5 * s)) < 1e-15);
    CHECK(std::abs(make_decay(2.0).scalar(s) - 1.0 / (s + 2.0)) < 1e-15);
    CHECK(make_decay(2.0).mu() == -1.0);
}

TEST_CASE("resolvent agrees with a dense inverse") {
    Eigen::MatrixXd a2(2, 2);
    a2 << 0.0, 1.0, -1.0, 0.0;
    Eigen::MatrixXd a3(3, 3);
    a3 << -1.0, 2.0, 0.0, 0.5, -3.0, 1.0, 0.0, 0.0, -0.2;
    for (const Eigen::MatrixXd& a : {a2, a3}) {
        const Symbol r = make_resolvent(a, 0.0, CFModel{1.0, 1.0});
        for (cplx s : {cplx(0.5, 0.3), cplx(2.0, -7.0)}) {
            const Value expect =
                (s * Value::Identity(a.rows(), a.cols()) - a.cast<cplx>()).inverse();
            CHECK((r(s) - expect).norm() < 1e-13 * expect.norm());
        }
        CHECK_THROWS_AS(r.scalar(1.0), ShapeError);
    }
    Eigen::MatrixXd ones = Eigen::MatrixXd::Identity(2, 2);
    const Symbol sing = make_resolvent(ones, 0.0, CFModel{1.0, 1.0});
    CHECK_THROWS_AS(sing(cplx(1.0, 0.0)), SingularMatrixError);
    CHECK_THROWS_AS(make_resolvent(Eigen::MatrixXd(2, 3), 0.0, CFModel{}), ShapeError);
}

TEST_CASE("product multiplies values and certificates") {
    const Symbol f = product(make_power(0.5), make_decay(1.0));
    const cplx s(1.0, 2.0);
    CHECK(std::abs(f.scalar(s) - std::sqrt(s) / (s + 1.0)) < 1e-15);
    CHECK(f.mu() == -0.5);
}

TEST_CASE("discrete symbol evaluates F at the discrete Laplace variable") {
    const Symbol f = make_power(0.5);
    const Symbol g = tr_symbol(f, 0.1);
    const cplx s(0.3, 4.0);
    CHECK(std::abs(g.scalar(s) - std::sqrt(trmap::s_kappa(s, 0.1))) < 1e-14);
    CHECK(g.mu() == 0.0);
    CHECK_THROWS_AS(tr_symbol(f, 0.0), DomainError);
}

TEST_CASE("growth certificates validate for honest symbols") {
    Eigen::MatrixXd skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    for (const Symbol& f : {make_power(0.0), make_power(-0.5), make_power(1.5), make_delay(1.0),
                            make_decay(1.0), make_resolvent(skew, 0.0, CFModel{1.0, 1.0})}) {
        const VerificationReport r = validate_growth(f, 20000, 11);
        CHECK_MESSAGE(r.passed(), f.spec());
        CHECK(r.samples == 20000);
    }
    for (double kappa : {1.0, 0.1}) {
        for (const Symbol& f : {make_power(-0.5), make_power(0.5), make_delay(1.0)}) {
            CHECK_MESSAGE(validate_growth(tr_symbol(f, kappa), 20000, 5).passed(), f.spec());
        }
    }
}

TEST_CASE("a dishonest certificate is caught") {
    const Symbol liar = make_power(1.0).with_certificate(0.0, CFModel{1.0, 0.0});
    const VerificationReport r = validate_growth(liar, 1000, 1);
    CHECK(r.violations > 0);
    CHECK(r.worst_margin < 0.0);
    CHECK(validate_growth(liar, 1000, 1).worst_point == r.worst_point);
}

TEST_CASE("symbol spec parser") {
    CHECK(parse_symbol_spec("power:0.5").mu() == 0.5);
    CHECK(parse_symbol_spec("delay:2").spec() == "delay:2");
    CHECK(parse_symbol_spec("decay:3").mu() == -1.0);
    CHECK_THROWS_AS(parse_symbol_spec("power:"), ParseError);
    CHECK_THROWS_AS(parse_symbol_spec("power:abc"), ParseError);
    CHECK_THROWS_AS(parse_symbol_spec("power:1x"), ParseError);
    CHECK_THROWS_AS(parse_symbol_spec("delay:-1"), ParseError);
    CHECK_THROWS_AS(parse_symbol_spec("bogus:1"), ParseError);
    CHECK_THROWS_AS(parse_symbol_spec("power"), ParseError);
    try {
        parse_symbol_spec("power:");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
    }
}

TEST_CASE("resolvent matrix files") {
    const std::string good = write_temp("trcq_good.txt",
                                        "# mu=0 cf_scale=1 cf_exponent=1\n0 1\n-1 0\n");
    const Symbol f = parse_symbol_spec("resolvent:" + good);
    CHECK(f.rows() == 2);
    CHECK(f.cf().exponent == 1.0);
    CHECK(validate_growth(f, 2000, 3).passed());

    const std::string ragged = write_temp("trcq_ragged.txt", "# mu=0\n1 2\n3\n");
    try {
        load_resolvent_file(ragged);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    const std::string bad_num = write_temp("trcq_badnum.txt", "# mu=0\n1 x\n0 1\n");
    CHECK_THROWS_AS(load_resolvent_file(bad_num), ParseError);
    const std::string no_mu = write_temp("trcq_nomu.txt", "1 0\n0 1\n");
    CHECK_THROWS_AS(load_resolvent_file(no_mu), ParseError);
    CHECK_THROWS_AS(load_resolvent_file("/nonexistent/matrix.txt"), ParseError);
}
