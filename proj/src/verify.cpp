#include "trcq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "trcq/bounds.hpp"
#include "trcq/errors.hpp"
#include "trcq/quadrature.hpp"
#include "trcq/trmap.hpp"

namespace trcq::verify {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kInnerRelTol = 1e-10;
constexpr int kCauchyNodes = 64;

double binom(int n, int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) {
        c = c * (n - k + j) / j;
    }
    return c;
}

cplx point_z(const json& p) { return {p.at("re").get<double>(), p.at("im").get<double>()}; }
cplx point_s(const json& p) { return {p.at("s_re").get<double>(), p.at("s_im").get<double>()}; }

// delta(e^{-z}) through the tanh identity, accurate for small and large |z|.
cplx delta_of_exp(cplx z) { return 2.0 * std::tanh(0.5 * z); }

// (z + w)^m - z^m without forming the two powers.
cplx power_difference(cplx z, cplx w, int m) {
    cplx acc = 0.0;
    cplx zp = 1.0;
    for (int j = 0; j < m; ++j) {
        acc += binom(m, j) * zp * std::pow(w, m - j);
        zp *= z;
    }
    return acc;
}

VerificationReport leaf(const std::string& name, std::uint64_t seed, double tol) {
    VerificationReport r;
    r.suite = name;
    r.seed = seed;
    r.rel_tol = tol;
    r.abs_tol = tol;
    return r;
}

void record(VerificationReport& r, const json& point);

// C+ point with modulus log-uniform in [1e-3, max_modulus].
cplx sample_disk(Rng& rng, double max_modulus) {
    HalfPlaneSampler s;
    s.max_modulus = max_modulus;
    return s(rng);
}

double sample_kappa(Rng& rng) { return 1.0 - rng.uniform01(); }

// ---------------------------------------------------------------- frequency integrals

struct AxisIntegral {
    double value = 0.0;
    bool converged = true;
};

void integrate_piece(const std::function<double(double)>& f, double a, double b, double& acc,
                     bool& ok) {
    if (!(b > a)) {
        return;
    }
    const QuadResult r = adaptive_simpson(f, a, b, kInnerRelTol, 1e-300, 4);
    acc += r.value;
    ok = ok && r.converged;
}

// Integral over [a, b] with breakpoints clustered geometrically toward the
// flagged ends, where the integrand may have a narrow peak of width `scale`.
void integrate_graded(const std::function<double(double)>& f, double a, double b, double scale,
                      bool near_a, bool near_b, double& acc, bool& ok) {
    std::vector<double> cuts{a, b};
    const double mid = 0.5 * (a + b);
    for (double d = 0.25 * scale; d < 0.5 * (b - a); d *= 4.0) {
        if (near_a) {
            cuts.push_back(a + d);
        }
        if (near_b) {
            cuts.push_back(b - d);
        }
    }
    if (near_a || near_b) {
        cuts.push_back(mid);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        integrate_piece(f, cuts[i], cuts[i + 1], acc, ok);
    }
}

// int_{|w| >= w0} f(w) dw for f even in w, plus the analytic tail bound
// tail(W) >= int_{|w| > W} f. With period > 0 the integrand may peak at
// w = (2j+1) period / 2 and the axis is cut at those points.
AxisIntegral axis_integral(const std::function<double(double)>& f, double w0, double scale,
                           double period, const std::function<double(double)>& tail) {
    constexpr double kMaxFrequency = 1e15;
    AxisIntegral out;
    double half = 0.0;
    auto done = [&](double upper) {
        const double t = tail(upper);
        return t <= 1e-3 * kInnerRelTol * 2.0 * half || (t == 0.0 && half == 0.0);
    };
    double upper = w0;
    if (period > 0.0) {
        double peak = 0.5 * period;
        while (peak <= w0) {
            peak += period;
        }
        integrate_graded(f, w0, peak, scale, false, true, half, out.converged);
        upper = peak;
        while (!done(upper) && upper < kMaxFrequency) {
            integrate_graded(f, upper, upper + period, scale, true, true, half, out.converged);
            upper += period;
        }
    } else {
        double width = scale;
        while (!done(upper) && upper < kMaxFrequency) {
            integrate_piece(f, upper, upper + width, half, out.converged);
            upper += width;
            width *= 2.0;
        }
    }
    const double t = tail(upper);
    out.converged = out.converged && std::isfinite(t);
    out.value = 2.0 * half + t;
    return out;
}

double time_integral(const std::function<double(double)>& f, double end) {
    const QuadResult r = adaptive_simpson(f, 0.0, end, kInnerRelTol, 1e-300, 256);
    if (!r.converged) {
        throw ConvergenceError("time-domain quadrature missed its tolerance", r.error);
    }
    return r.value;
}

void require_polyexp(const SmoothCausalFunction& g, int min_power, const char* who) {
    const std::string prefix = "polyexp:";
    int k = -1;
    if (g.spec == "poly5exp") {
        k = 5;
    } else if (g.spec.rfind(prefix, 0) == 0) {
        k = std::stoi(g.spec.substr(prefix.size()));
    }
    if (k < min_power) {
        throw DomainError(std::string(who) + " needs polyexp:k with k >= " +
                          std::to_string(min_power));
    }
}

int polyexp_power(const SmoothCausalFunction& g) {
    return g.spec == "poly5exp" ? 5 : std::stoi(g.spec.substr(8));
}

// ---------------------------------------------------------------- probes

Probe probe_lemma42(const json& p, bool whole_line) {
    const double sigma = p.at("sigma");
    const double alpha = p.at("alpha");
    const double c = p.at("c");
    const double kappa = p.at("kappa");
    Probe out;
    out.quantity = lemma42_integral(sigma, alpha, c, kappa, whole_line);
    out.bound = whole_line ? 2.0 / std::pow(sigma, alpha) + 2.0 / (alpha - 1.0)
                           : 2.0 * alpha / (alpha - 1.0) * std::pow(kappa / c, alpha - 1.0);
    return out;
}

Probe probe_lemma33(const json& p) {
    const SmoothCausalFunction g = parse_g_spec(p.at("g").get<std::string>());
    const double sigma = p.at("sigma");
    if (!g.laplace || !g.laplace_tail) {
        throw DomainError("lemma33 needs a test function with a closed-form transform");
    }
    const auto lhs = axis_integral(
        [&](double w) { return std::abs(g.laplace(cplx(sigma, w))); }, 0.0, 0.25 * std::min(sigma, 1.0),
        0.0, g.laplace_tail);
    if (!lhs.converged) {
        throw ConvergenceError("lemma33 frequency integral missed its tolerance", lhs.value);
    }
    // The time integral is truncated, so the right-hand side is a lower estimate.
    const double rhs = kPi / sigma *
                       time_integral([&](double t) { return std::abs(g(t, 2)); }, g.support_end);
    return {lhs.value, rhs};
}

Probe probe_prop34a(const json& p) {
    const SmoothCausalFunction g = parse_g_spec(p.at("g").get<std::string>());
    const double sigma = p.at("sigma");
    const int m = p.at("m");
    const double kappa = p.at("kappa");
    const int k = polyexp_power(g);
    const double kfact = std::tgamma(k + 1.0);
    const double stab = 8.0 / (kappa * kappa * std::min(sigma, 1.0));
    auto integrand = [&](double w) {
        const cplx s(sigma, w);
        const cplx defect = trmap::tr_defect(kappa * s) / kappa;
        return std::abs(power_difference(s, defect, m) * g.laplace(s));
    };
    // |s_kappa^m - s^m| |G| <= (stab^m + 2^{m/2} |w|^m) k! / |w|^{k+1} for |w| >= sigma.
    auto tail = [&](double w) {
        if (w < sigma) {
            return std::numeric_limits<double>::infinity();
        }
        return 2.0 * kfact *
               (std::pow(stab, m) * std::pow(w, -k) / k +
                std::pow(2.0, 0.5 * m) * std::pow(w, m - k) / (k - m));
    };
    const auto lhs = axis_integral(integrand, 0.0, 0.25 * std::min(sigma, 1.0),
                                   2.0 * kPi / kappa, tail);
    if (!lhs.converged) {
        throw ConvergenceError("prop34a frequency integral missed its tolerance", lhs.value);
    }
    const double weight = time_integral(
        [&](double t) { return std::abs(apply_Pm(g, m, t, m + 4)); }, g.support_end);
    const double rhs = kappa * kappa * const_Cm1(m) /
                       (sigma * std::min(std::pow(sigma, m), 1.0)) * weight;
    return {lhs.value, rhs};
}

Probe hyperbolic_probe(char part, double x) {
    const double lo = std::min(1.0, x);
    switch (part) {
        case 'a': return {0.5 * lo, std::tanh(x)};
        case 'b': return {1.0 / std::tanh(x), 2.0 / lo};
        case 'c': return {0.25 * lo, std::tanh(0.5 * x)};
        case 'd': return {1.0 / std::tanh(0.5 * x), 4.0 / lo};
        default: throw DomainError("unknown hyperbolic part");
    }
}

Probe lemma31_probe(char part, cplx z, int m) {
    switch (part) {
        case 'a': return {0.5 * std::min(z.real(), 1.0), delta_of_exp(z).real()};
        case 'b': return {std::abs(delta_of_exp(z)), 8.0 / std::min(z.real(), 1.0)};
        case 'c': {
            const double r = std::abs(z);
            return {std::abs(power_difference(z, trmap::tr_defect(z), m)),
                    trmap::E_m_eval(r, m) * std::pow(r, m + 2)};
        }
        case 'd': {
            const double r = std::abs(z);
            return {1.0 - r * r * trmap::D_eval(r), (1.0 + z * z * trmap::q_ratio(z)).real()};
        }
        default: throw DomainError("unknown lemma31 part");
    }
}

Probe prop32_probe(char part, cplx s, double kappa, int m) {
    switch (part) {
        case 'a': return {0.5 * std::min(s.real(), 1.0), trmap::s_kappa(s, kappa).real()};
        case 'b':
            return {std::abs(trmap::s_kappa(s, kappa)),
                    8.0 / (kappa * kappa * std::min(s.real(), 1.0))};
        case 'c': {
            const cplx z = kappa * s;
            const double x = std::abs(z);
            return {std::abs(power_difference(s, trmap::tr_defect(z) / kappa, m)),
                    trmap::E_m_eval(x, m) * kappa * kappa * std::pow(std::abs(s), m + 2)};
        }
        case 'd': {
            const cplx z = kappa * s;
            const double x = std::abs(z);
            return {1.0 - x * x * trmap::D_eval(x), (1.0 + z * z * trmap::q_ratio(z)).real()};
        }
        default: throw DomainError("unknown prop32 part");
    }
}

Probe lemma32_probe(cplx z, int m) {
    return {1.0 + std::pow(std::abs(z), m), std::pow(2.0, 0.5 * m) * std::pow(std::abs(1.0 + z), m)};
}

Probe prop41_probe(char part, cplx s, double kappa, const Symbol& f) {
    const double mu = f.mu();
    if (part == 'b') {
        const double r = 0.5 * s.real();
        const double bound = theta2(s.real(), mu, f.cf()) * std::pow(std::abs(s), mu);
        if (f.is_scalar()) {
            cplx acc = 0.0;
            for (int k = 0; k < kCauchyNodes; ++k) {
                const cplx e = std::polar(1.0, 2.0 * kPi * k / kCauchyNodes);
                acc += f.scalar(s + r * e) / e;
            }
            acc /= static_cast<double>(kCauchyNodes) * r;
            return {std::abs(acc), bound};
        }
        Value deriv = Value::Zero(f.rows(), f.cols());
        for (int k = 0; k < kCauchyNodes; ++k) {
            const cplx e = std::polar(1.0, 2.0 * kPi * k / kCauchyNodes);
            deriv += f(s + r * e) / e;
        }
        deriv /= static_cast<double>(kCauchyNodes) * r;
        return {operator_norm(deriv), bound};
    }
    const cplx sk = trmap::s_kappa(s, kappa);
    if (part == 'a') {
        const double norm = f.is_scalar() ? std::abs(f.scalar(sk)) : operator_norm(f(sk));
        return {norm, theta1(s.real(), mu, f.cf())};
    }
    if (part != 'c') {
        throw DomainError("unknown prop41 part");
    }
    const double x = kappa * std::abs(s);
    const double bound = kappa * kappa * theta2(0.5 * std::min(s.real(), 1.0), mu, f.cf()) *
                         theta3(x, mu) * std::pow(std::abs(s), mu + 3.0);
    const double diff = f.is_scalar() ? std::abs(f.scalar(sk) - f.scalar(s))
                                      : operator_norm(f(sk) - f(s));
    return {diff, bound};
}

// Records a probe; the JSON point is only built when it becomes the worst one.
template <typename MakePoint>
void record_lazy(VerificationReport& r, const Probe& p, MakePoint make_point) {
    const double margin = p.bound - p.quantity;
    if (!(margin >= r.worst_margin)) {
        r.record(p.quantity, p.bound, make_point());
    } else {
        r.record(p.quantity, p.bound, json());
    }
}

void record(VerificationReport& r, const json& point) {
    const Probe p = probe(r.suite, point);
    r.record(p.quantity, p.bound, point);
}

}  // namespace

Probe probe(const std::string& part, const json& p, const Symbol* f) {
    if (part.rfind("hyperbolic.", 0) == 0) {
        return hyperbolic_probe(part.back(), p.at("x"));
    }
    if (part.rfind("lemma31.", 0) == 0) {
        return lemma31_probe(part.back(), point_z(p), p.value("m", 1));
    }
    if (part.rfind("prop32.", 0) == 0) {
        return prop32_probe(part.back(), point_s(p), p.at("kappa"), p.value("m", 1));
    }
    if (part == "lemma32") {
        return lemma32_probe(point_z(p), p.at("m"));
    }
    if (part.rfind("prop41.", 0) == 0) {
        const double kappa = p.value("kappa", 1.0);
        if (f != nullptr) {
            return prop41_probe(part.back(), point_s(p), kappa, *f);
        }
        const Symbol parsed = parse_symbol_spec(p.at("symbol").get<std::string>());
        return prop41_probe(part.back(), point_s(p), kappa, parsed);
    }
    if (part == "lemma42.a" || part == "lemma42.b") {
        return probe_lemma42(p, part.back() == 'b');
    }
    if (part == "lemma33") {
        return probe_lemma33(p);
    }
    if (part == "prop34a") {
        return probe_prop34a(p);
    }
    throw DomainError("unknown verification part '" + part + "'");
}

double reevaluate_margin(const std::string& part, const json& point, const Symbol* f) {
    const Probe p = probe(part, point, f);
    return p.bound - p.quantity;
}

VerificationReport check_hyperbolic(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw DomainError("check_hyperbolic: need at least one sample");
    }
    std::vector<VerificationReport> parts;
    for (const char* name : {"hyperbolic.a", "hyperbolic.b", "hyperbolic.c", "hyperbolic.d"}) {
        parts.push_back(leaf(name, seed, kSampleTol));
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.log_uniform(1e-6, 1e3);
        for (auto& part : parts) {
            record_lazy(part, hyperbolic_probe(part.suite.back(), x), [x] { return json{{"x", x}}; });
        }
    }
    VerificationReport out = leaf("hyperbolic", seed, kSampleTol);
    for (auto& part : parts) {
        out.absorb(std::move(part));
    }
    return out;
}

VerificationReport check_lemma31(std::size_t samples, std::uint64_t seed, int m_max) {
    if (samples == 0 || m_max < 1) {
        throw DomainError("check_lemma31: need samples >= 1 and m_max >= 1");
    }
    VerificationReport a = leaf("lemma31.a", seed, kSampleTol);
    VerificationReport b = leaf("lemma31.b", seed, kSampleTol);
    VerificationReport c = leaf("lemma31.c", seed, kSampleTol);
    VerificationReport d = leaf("lemma31.d", seed, kSampleTol);
    Rng rng(seed);
    const HalfPlaneSampler half_plane;
    const double pi_cap = kPi * (1.0 - kBoundaryInset);
    const double c0_cap = trmap::c0() * (1.0 - kBoundaryInset);
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx z = half_plane(rng);
        auto pz = [z] { return json{{"re", z.real()}, {"im", z.imag()}}; };
        record_lazy(a, lemma31_probe('a', z, 1), pz);
        record_lazy(b, lemma31_probe('b', z, 1), pz);
        const cplx zc = sample_disk(rng, pi_cap);
        for (int m = 1; m <= m_max; ++m) {
            record_lazy(c, lemma31_probe('c', zc, m),
                        [zc, m] { return json{{"re", zc.real()}, {"im", zc.imag()}, {"m", m}}; });
        }
        const cplx zd = sample_disk(rng, c0_cap);
        record_lazy(d, lemma31_probe('d', zd, 1),
                    [zd] { return json{{"re", zd.real()}, {"im", zd.imag()}}; });
    }
    VerificationReport out = leaf("lemma31", seed, kSampleTol);
    for (auto* part : {&a, &b, &c, &d}) {
        out.absorb(std::move(*part));
    }
    return out;
}

VerificationReport check_prop32(std::size_t samples, std::uint64_t seed, int m_max) {
    if (samples == 0 || m_max < 1) {
        throw DomainError("check_prop32: need samples >= 1 and m_max >= 1");
    }
    VerificationReport a = leaf("prop32.a", seed, kSampleTol);
    VerificationReport b = leaf("prop32.b", seed, kSampleTol);
    VerificationReport c = leaf("prop32.c", seed, kSampleTol);
    VerificationReport d = leaf("prop32.d", seed, kSampleTol);
    Rng rng(seed);
    const HalfPlaneSampler half_plane;
    const double pi_cap = kPi * (1.0 - kBoundaryInset);
    const double c0_cap = trmap::c0() * (1.0 - kBoundaryInset);
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx s = half_plane(rng);
        const double kappa = sample_kappa(rng);
        auto ps = [s, kappa] { return json{{"s_re", s.real()}, {"s_im", s.imag()}, {"kappa", kappa}}; };
        record_lazy(a, prop32_probe('a', s, kappa, 1), ps);
        record_lazy(b, prop32_probe('b', s, kappa, 1), ps);
        // Parts (c) and (d) live on |kappa s| < pi and < c_0: draw z there, then s = z / kappa.
        const double kc = sample_kappa(rng);
        const cplx sc = sample_disk(rng, pi_cap) / kc;
        for (int m = 1; m <= m_max; ++m) {
            record_lazy(c, prop32_probe('c', sc, kc, m), [sc, kc, m] {
                return json{{"s_re", sc.real()}, {"s_im", sc.imag()}, {"kappa", kc}, {"m", m}};
            });
        }
        const double kd = sample_kappa(rng);
        const cplx sd = sample_disk(rng, c0_cap) / kd;
        record_lazy(d, prop32_probe('d', sd, kd, 1), [sd, kd] {
            return json{{"s_re", sd.real()}, {"s_im", sd.imag()}, {"kappa", kd}};
        });
    }
    VerificationReport out = leaf("prop32", seed, kSampleTol);
    for (auto* part : {&a, &b, &c, &d}) {
        out.absorb(std::move(*part));
    }
    return out;
}

VerificationReport check_lemma32(std::size_t samples, std::uint64_t seed, int m_max) {
    if (samples == 0 || m_max < 1) {
        throw DomainError("check_lemma32: need samples >= 1 and m_max >= 1");
    }
    VerificationReport r = leaf("lemma32", seed, kSampleTol);
    Rng rng(seed);
    const HalfPlaneSampler half_plane;
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx z = half_plane(rng);
        for (int m = 1; m <= m_max; ++m) {
            record_lazy(r, lemma32_probe(z, m),
                        [z, m] { return json{{"re", z.real()}, {"im", z.imag()}, {"m", m}}; });
        }
    }
    return r;
}

VerificationReport check_prop41(const Symbol& f, std::size_t samples, std::uint64_t seed,
                                const std::vector<double>& kappa_grid) {
    if (samples == 0) {
        throw DomainError("check_prop41: need at least one sample");
    }
    if (f.mu() > 0.0) {
        throw DomainError("check_prop41: symbol must have mu <= 0");
    }
    for (double k : kappa_grid) {
        if (!(k > 0.0 && k <= 1.0)) {
            throw DomainError("check_prop41: time steps must lie in (0, 1]");
        }
    }
    const std::string tag = "[" + f.spec() + "]";
    VerificationReport a = leaf("prop41.a", seed, kSampleTol);
    VerificationReport b = leaf("prop41.b", seed, kDerivativeTol);
    VerificationReport c = leaf("prop41.c", seed, kSampleTol);
    Rng rng(seed);
    const HalfPlaneSampler half_plane;
    const double c0_cap = trmap::c0() * (1.0 - kBoundaryInset);
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx s = half_plane(rng);
        record_lazy(b, prop41_probe('b', s, 1.0, f), [&f, s] {
            return json{{"s_re", s.real()}, {"s_im", s.imag()}, {"symbol", f.spec()}};
        });
        for (double kappa : kappa_grid) {
            record_lazy(a, prop41_probe('a', s, kappa, f), [&f, s, kappa] {
                return json{{"s_re", s.real()}, {"s_im", s.imag()}, {"kappa", kappa}, {"symbol", f.spec()}};
            });
            const cplx sc = sample_disk(rng, c0_cap) / kappa;
            record_lazy(c, prop41_probe('c', sc, kappa, f), [&f, sc, kappa] {
                return json{{"s_re", sc.real()}, {"s_im", sc.imag()}, {"kappa", kappa}, {"symbol", f.spec()}};
            });
        }
    }
    VerificationReport out = leaf("prop41" + tag, seed, kSampleTol);
    for (auto* part : {&a, &b, &c}) {
        out.absorb(std::move(*part));
    }
    return out;
}

double lemma42_integral(double sigma, double alpha, double c, double kappa, bool whole_line) {
    if (!(sigma > 0.0) || !(alpha > 1.0) || !(c > 0.0) || !(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("lemma42: needs sigma > 0, alpha > 1, c > 0 and kappa in (0, 1]");
    }
    const double radius = c / kappa;
    const double w0 = whole_line ? 0.0 : std::sqrt(std::max(0.0, radius * radius - sigma * sigma));
    const auto r = axis_integral(
        [sigma, alpha](double w) { return std::pow(sigma * sigma + w * w, -0.5 * alpha); }, w0,
        0.25 * sigma, 0.0,
        [alpha](double w) {
            return w > 0.0 ? 2.0 * std::pow(w, 1.0 - alpha) / (alpha - 1.0)
                           : std::numeric_limits<double>::infinity();
        });
    if (!r.converged) {
        throw ConvergenceError("lemma42 frequency integral missed its tolerance", r.value);
    }
    return r.value;
}

VerificationReport check_lemma42(double sigma, double alpha, double c, double kappa) {
    const json point = {{"sigma", sigma}, {"alpha", alpha}, {"c", c}, {"kappa", kappa}};
    VerificationReport a = leaf("lemma42.a", 0, kQuadratureTol);
    VerificationReport b = leaf("lemma42.b", 0, kQuadratureTol);
    record(a, point);
    record(b, point);
    VerificationReport out = leaf("lemma42", 0, kQuadratureTol);
    out.absorb(std::move(a));
    out.absorb(std::move(b));
    return out;
}

VerificationReport check_lemma33(const SmoothCausalFunction& g, double sigma) {
    if (!(sigma > 0.0)) {
        throw DomainError("check_lemma33: needs sigma > 0");
    }
    if (g.max_order < 2) {
        throw OrderOverflowError("check_lemma33: g must provide second derivatives");
    }
    VerificationReport r = leaf("lemma33", 0, kQuadratureTol);
    record(r, {{"g", g.spec}, {"sigma", sigma}});
    return r;
}

VerificationReport check_prop34a(const SmoothCausalFunction& g, double sigma, int m, double kappa) {
    if (!(sigma > 0.0) || m < 1 || !(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("check_prop34a: needs sigma > 0, m >= 1 and kappa in (0, 1]");
    }
    require_polyexp(g, 2 * m + 4, "check_prop34a");
    VerificationReport r = leaf("prop34a", 0, kQuadratureTol);
    record(r, {{"g", g.spec}, {"sigma", sigma}, {"m", m}, {"kappa", kappa}});
    return r;
}

std::vector<Symbol> default_prop41_zoo() {
    Eigen::MatrixXd skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    return {make_power(0.0), make_power(-0.5), make_power(-1.0), make_delay(1.0), make_decay(1.0),
            make_resolvent(skew, 0.0, CFModel{1.0, 1.0})};
}

std::vector<std::string> suite_names() {
    return {"hyperbolic", "lemma31", "prop32", "lemma32", "prop41",
            "lemma42",    "lemma33", "prop34a", "growth"};
}

VerificationReport run_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
    if (name == "hyperbolic") {
        return check_hyperbolic(samples, seed);
    }
    if (name == "lemma31") {
        return check_lemma31(samples, seed);
    }
    if (name == "prop32") {
        return check_prop32(samples, seed);
    }
    if (name == "lemma32") {
        return check_lemma32(samples, seed);
    }
    VerificationReport out;
    out.suite = name;
    out.seed = seed;
    if (name == "prop41") {
        for (const auto& f : default_prop41_zoo()) {
            out.absorb(check_prop41(f, samples, seed));
        }
        return out;
    }
    if (name == "growth") {
        for (const auto& f : default_prop41_zoo()) {
            out.absorb(validate_growth(f, samples, seed));
        }
        out.absorb(validate_growth(make_power(0.5), samples, seed));
        out.absorb(validate_growth(make_power(1.0), samples, seed));
        return out;
    }
    if (name == "lemma42") {
        out.absorb(check_lemma42(1.0, 2.0, 1.0, 0.5));
        out.absorb(check_lemma42(0.5, 4.0, 2.0, 0.1));
        out.absorb(check_lemma42(2.0, 5.0, 0.5, 1.0));
        return out;
    }
    if (name == "lemma33") {
        for (double sigma : {0.5, 1.0, 2.0}) {
            out.absorb(check_lemma33(make_polyexp(2), sigma));
        }
        out.absorb(check_lemma33(make_polyexp(5), 1.0));
        return out;
    }
    if (name == "prop34a") {
        out.absorb(check_prop34a(make_polyexp(6), 1.0, 1, 0.1));
        out.absorb(check_prop34a(make_polyexp(6), 1.0, 1, 0.05));
        out.absorb(check_prop34a(make_polyexp(6), 0.5, 1, 1.0));
        out.absorb(check_prop34a(make_polyexp(8), 1.0, 2, 0.1));
        out.absorb(check_prop34a(make_polyexp(10), 2.0, 3, 0.5));
        return out;
    }
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace trcq::verify
