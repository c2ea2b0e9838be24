#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "trcq/report.hpp"
#include "trcq/sampling.hpp"
#include "trcq/value.hpp"

namespace trcq {

/// Near-zero growth model C_F(x) = scale * min{x, 1}^{-exponent}.
struct CFModel {
    double scale = 1.0;
    double exponent = 0.0;

    double operator()(double x) const;
};

/// Transfer function on the open right half plane with a declared growth
/// certificate ||F(s)|| <= C_F(Re s) |s|^mu.
class Symbol {
public:
    using Evaluator = std::function<Value(cplx)>;
    using ScalarEvaluator = std::function<cplx(cplx)>;

    Symbol(std::string spec, Evaluator eval, double mu, CFModel cf, Eigen::Index rows,
           Eigen::Index cols, bool real_kernel);
    Symbol(std::string spec, ScalarEvaluator eval, double mu, CFModel cf, bool real_kernel);

    /// Value at s. Throws DomainError for non-finite s or Re s <= 0.
    Value operator()(cplx s) const;
    /// Scalar value at s; throws ShapeError for matrix symbols.
    cplx scalar(cplx s) const;

    bool is_scalar() const noexcept { return rows_ == 1 && cols_ == 1; }
    Eigen::Index rows() const noexcept { return rows_; }
    Eigen::Index cols() const noexcept { return cols_; }
    double mu() const noexcept { return mu_; }
    const CFModel& cf() const noexcept { return cf_; }
    const std::string& spec() const noexcept { return spec_; }
    /// True when F(conj s) = conj F(s), so the time-domain kernel is real.
    bool real_kernel() const noexcept { return real_kernel_; }

    /// Same evaluator under a different growth certificate.
    Symbol with_certificate(double mu, CFModel cf) const;

private:
    std::string spec_;
    Evaluator eval_;
    ScalarEvaluator scalar_eval_;
    double mu_;
    CFModel cf_;
    Eigen::Index rows_;
    Eigen::Index cols_;
    bool real_kernel_;
};

/// s^mu on the principal branch; cf = (1, 0).
Symbol make_power(double mu);
/// exp(-d s), d > 0; mu = 0, cf = (1, 0).
Symbol make_delay(double d);
/// 1 / (s + a), a > 0; mu = -1, cf = (1, 0).
Symbol make_decay(double a);
/// (sI - A)^{-1} with a user-supplied certificate. Throws SingularMatrixError
/// at points where sI - A is numerically singular.
Symbol make_resolvent(const Eigen::MatrixXd& a, double mu, CFModel cf);
/// Pointwise product F(s) G(s); mu and C_F multiply accordingly.
Symbol product(const Symbol& f, const Symbol& g);

/// s -> F(s_kappa(s, kappa)). The certificate is derived from the stability
/// bound of the discrete frequency: mu = 0 and a C_F that grows like
/// min{x, 1}^{-(exponent - mu)} for mu <= 0, or picks up (8 / kappa^2)^mu for mu > 0.
Symbol tr_symbol(const Symbol& f, double kappa);

/// Samples the half plane and checks ||F(s)|| <= C_F(Re s) |s|^mu (1 + 1e-10).
VerificationReport validate_growth(const Symbol& f, std::size_t samples, std::uint64_t seed);

/// Parses "power:x", "delay:d", "decay:a" or "resolvent:<path>".
/// Throws ParseError with line and column on malformed input.
Symbol parse_symbol_spec(const std::string& spec);

/// Reads a resolvent matrix file: `# key=value` header lines (mu, cf_scale,
/// cf_exponent) followed by whitespace-separated rows of reals.
Symbol load_resolvent_file(const std::string& path);

}  // namespace trcq
