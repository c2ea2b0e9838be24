#pragma once

#include "trcq/smooth.hpp"
#include "trcq/symbols.hpp"

namespace trcq {

/// Constants of the explicit error bound for one growth exponent mu.
struct BoundConstants {
    double Cm1 = 0.0;   ///< integer-order part before the e/(2 pi) factor
    double Cmu1 = 0.0;  ///< fractional part before the e/(2 pi) factor
    double Cmu2 = 0.0;
    double Cm = 0.0;
    double Cmu3 = 0.0;
    double Cmu = 0.0;   ///< max{Cmu2, Cmu3}
};

struct BoundParams {
    double mu = 0.0;
    int m = 0;          ///< ceil(mu)
    int alpha = 0;      ///< floor(mu - m) + 5
    int beta = 0;       ///< max{2m + 4, m + alpha}
    double epsilon = 0.0;
    double delta_shift = 0.0;  ///< floor(mu) - mu + 1
    BoundConstants constants;
};

/// Integer parameters and the exponent only; no constants.
BoundParams derive_shape(double mu);
/// derive_shape plus const_chain(mu). Throws DomainError for mu < 0.
BoundParams derive_params(double mu);

/// (min{x,1}/2)^mu C_F(min{x,1}/2) for mu <= 0.
double theta1(double sigma, double mu, const CFModel& cf);
/// 2^{1-mu} / x C_F(x / 2) for mu <= 0.
double theta2(double sigma, double mu, const CFModel& cf);
/// D(x) (1 - x^2 D(x))^mu on (0, c_0) for mu <= 0.
double theta3(double sigma, double mu);

/// sum_{l=0}^m C(m,l) g^{(l + shift)}(t).
double apply_Pm(const SmoothCausalFunction& g, int m, double t, int shift = 0);

/// pi 2^{m/2} min_c max{E_m(c) + 1/c^2, 8^m / c^{2m+2}} over c in (0.01, pi - 0.01); 0 for m = 0.
double const_Cm1(int m);
/// Objective minimized by const_Cm1 (m >= 1).
double Cm1_objective(int m, double c);
/// min_c e1 Theta_3(c) + e2 c^{1-alpha} over c in (0.01, c_0 - 0.01) for -1 < mu' <= 0.
double const_Cmu1(double mu_prime);
double Cmu1_objective(double mu_prime, double c);

/// Full chain for mu >= 0, cached per mu.
BoundConstants const_chain(double mu);

/// kappa^2 C_F(min{1/t,1}/4) C_mu / min{t^{-eps},1} (I_1 + I_2) with
/// I_1 = int_0^t |g^{(m+alpha)}| and I_2 = int_0^t |P_m g^{(m+4)}|.
/// Throws DomainError for mu < 0 and ConvergenceError when quadrature fails.
double bound_rhs(const Symbol& f, const SmoothCausalFunction& g, double kappa, double t);

}  // namespace trcq
