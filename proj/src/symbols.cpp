#include "trcq/symbols.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "trcq/errors.hpp"
#include "trcq/trmap.hpp"

namespace trcq {

namespace {

constexpr double kGrowthTol = 1e-10;

void require_half_plane(cplx s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("symbol evaluated at a non-finite point");
    }
    if (!(s.real() > 0.0)) {
        throw DomainError("symbol evaluated outside the open right half plane");
    }
}

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// Parses the whole of `text` as a double; `column` is 1-based for diagnostics.
double parse_real(const std::string& text, std::size_t line, std::size_t column,
                  const std::string& what) {
    if (text.empty()) {
        throw ParseError("expected a number for " + what, line, column);
    }
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
        throw ParseError("expected a number for " + what, line, column);
    }
    if (*end != '\0') {
        throw ParseError("trailing characters after number for " + what, line,
                         column + static_cast<std::size_t>(end - begin));
    }
    if (errno == ERANGE || !std::isfinite(value)) {
        throw ParseError("number out of range for " + what, line, column);
    }
    return value;
}

}  // namespace

double CFModel::operator()(double x) const {
    if (!(x > 0.0)) {
        throw DomainError("C_F is defined on (0, inf)");
    }
    if (x >= 1.0 || exponent == 0.0) {
        return scale;
    }
    return scale * std::pow(x, -exponent);
}

Symbol::Symbol(std::string spec, Evaluator eval, double mu, CFModel cf, Eigen::Index rows,
               Eigen::Index cols, bool real_kernel)
    : spec_(std::move(spec)),
      eval_(std::move(eval)),
      mu_(mu),
      cf_(cf),
      rows_(rows),
      cols_(cols),
      real_kernel_(real_kernel) {
    if (rows_ < 1 || cols_ < 1) {
        throw ShapeError("symbol value space must be non-empty");
    }
}

Symbol::Symbol(std::string spec, ScalarEvaluator eval, double mu, CFModel cf, bool real_kernel)
    : spec_(std::move(spec)),
      scalar_eval_(std::move(eval)),
      mu_(mu),
      cf_(cf),
      rows_(1),
      cols_(1),
      real_kernel_(real_kernel) {}

Value Symbol::operator()(cplx s) const {
    require_half_plane(s);
    if (scalar_eval_) {
        return scalar_value(scalar_eval_(s));
    }
    return eval_(s);
}

cplx Symbol::scalar(cplx s) const {
    if (!is_scalar()) {
        throw ShapeError("scalar evaluation of a matrix-valued symbol " + spec_);
    }
    require_half_plane(s);
    if (scalar_eval_) {
        return scalar_eval_(s);
    }
    return eval_(s)(0, 0);
}

Symbol Symbol::with_certificate(double mu, CFModel cf) const {
    Symbol out = *this;
    out.mu_ = mu;
    out.cf_ = cf;
    return out;
}

Symbol make_power(double mu) {
    if (!std::isfinite(mu)) {
        throw DomainError("make_power: exponent must be finite");
    }
    Symbol::ScalarEvaluator eval = [mu](cplx s) {
        if (mu == 0.0) {
            return cplx(1.0, 0.0);
        }
        if (mu == 1.0) {
            return s;
        }
        return std::exp(mu * std::log(s));
    };
    return Symbol("power:" + format_number(mu), std::move(eval), mu, CFModel{1.0, 0.0}, true);
}

Symbol make_delay(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw DomainError("make_delay: delay must be positive");
    }
    return Symbol("delay:" + format_number(d), [d](cplx s) { return std::exp(-d * s); }, 0.0,
                  CFModel{1.0, 0.0}, true);
}

Symbol make_decay(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("make_decay: rate must be positive");
    }
    return Symbol("decay:" + format_number(a), [a](cplx s) { return 1.0 / (s + a); }, -1.0,
                  CFModel{1.0, 0.0}, true);
}

Symbol make_resolvent(const Eigen::MatrixXd& a, double mu, CFModel cf) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw ShapeError("make_resolvent: matrix must be square and non-empty");
    }
    if (!a.allFinite()) {
        throw DomainError("make_resolvent: matrix entries must be finite");
    }
    const Eigen::MatrixXcd ac = a.cast<cplx>();
    Symbol::Evaluator eval = [ac](cplx s) -> Value {
        const Eigen::Index n = ac.rows();
        if (n <= 2) {
            // Adjugate formula; singular when |det| is negligible next to the entries.
            const cplx a00 = s - ac(0, 0);
            if (n == 1) {
                if (std::abs(a00) <= 1e3 * std::numeric_limits<double>::epsilon() * std::abs(s)) {
                    throw SingularMatrixError("sI - A is numerically singular");
                }
                return scalar_value(1.0 / a00);
            }
            const cplx a01 = -ac(0, 1);
            const cplx a10 = -ac(1, 0);
            const cplx a11 = s - ac(1, 1);
            const cplx det = a00 * a11 - a01 * a10;
            const double scale = std::max({std::abs(a00), std::abs(a01), std::abs(a10), std::abs(a11)});
            if (!(std::abs(det) > 1e3 * std::numeric_limits<double>::epsilon() * scale * scale)) {
                throw SingularMatrixError("sI - A is numerically singular");
            }
            Value inv(2, 2);
            inv << a11 / det, -a01 / det, -a10 / det, a00 / det;
            return inv;
        }
        Eigen::MatrixXcd shifted = -ac;
        shifted.diagonal().array() += s;
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
        if (!(lu.rcond() > 1e3 * std::numeric_limits<double>::epsilon())) {
            throw SingularMatrixError("sI - A is numerically singular at s = (" +
                                      format_number(s.real()) + ", " + format_number(s.imag()) +
                                      ")");
        }
        return lu.solve(Eigen::MatrixXcd::Identity(n, n));
    };
    std::ostringstream spec;
    spec << "resolvent:" << a.rows() << "x" << a.cols();
    return Symbol(spec.str(), std::move(eval), mu, cf, a.rows(), a.cols(), true);
}

Symbol product(const Symbol& f, const Symbol& g) {
    if (f.cols() != g.rows()) {
        throw ShapeError("product: inner dimensions differ");
    }
    const CFModel cf{f.cf().scale * g.cf().scale, f.cf().exponent + g.cf().exponent};
    const double mu = f.mu() + g.mu();
    const bool real = f.real_kernel() && g.real_kernel();
    const std::string spec = f.spec() + "*" + g.spec();
    if (f.is_scalar() && g.is_scalar()) {
        return Symbol(spec, [f, g](cplx s) { return f.scalar(s) * g.scalar(s); }, mu, cf, real);
    }
    return Symbol(spec, [f, g](cplx s) -> Value { return f(s) * g(s); }, mu, cf, f.rows(),
                  g.cols(), real);
}

Symbol tr_symbol(const Symbol& f, double kappa) {
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw DomainError("tr_symbol: time step must lie in (0, 1]");
    }
    const double mu = f.mu();
    const CFModel base = f.cf();
    CFModel cf;
    if (mu <= 0.0) {
        cf = CFModel{base.scale * std::pow(2.0, base.exponent - mu), base.exponent - mu};
    } else {
        cf = CFModel{base.scale * std::pow(2.0, base.exponent) * std::pow(8.0 / (kappa * kappa), mu),
                     base.exponent + mu};
    }
    const std::string spec = "tr(" + f.spec() + "," + format_number(kappa) + ")";
    if (f.is_scalar()) {
        return Symbol(spec, [f, kappa](cplx s) { return f.scalar(trmap::s_kappa(s, kappa)); },
                      0.0, cf, f.real_kernel());
    }
    return Symbol(spec, [f, kappa](cplx s) -> Value { return f(trmap::s_kappa(s, kappa)); }, 0.0,
                  cf, f.rows(), f.cols(), f.real_kernel());
}

VerificationReport validate_growth(const Symbol& f, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw DomainError("validate_growth: need at least one sample");
    }
    VerificationReport report;
    report.suite = "growth:" + f.spec();
    report.seed = seed;
    report.rel_tol = kGrowthTol;
    report.abs_tol = 0.0;
    Rng rng(seed);
    const HalfPlaneSampler sampler;
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx s = sampler(rng);
        const double lhs = operator_norm(f(s));
        const double rhs = f.cf()(s.real()) * std::pow(std::abs(s), f.mu());
        report.record(lhs, rhs, {{"re", s.real()}, {"im", s.imag()}});
    }
    return report;
}

Symbol load_resolvent_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open matrix file '" + path + "'", 0, 0);
    }
    double mu = 0.0;
    CFModel cf;
    bool have_mu = false;
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#') {
            std::size_t pos = first + 1;
            while (pos < line.size()) {
                pos = line.find_first_not_of(" \t\r", pos);
                if (pos == std::string::npos) {
                    break;
                }
                const auto end = std::min(line.find_first_of(" \t\r", pos), line.size());
                const std::string token = line.substr(pos, end - pos);
                const auto eq = token.find('=');
                if (eq != std::string::npos) {
                    const std::string key = token.substr(0, eq);
                    const std::size_t col = pos + eq + 2;
                    const std::string val = token.substr(eq + 1);
                    if (key == "mu") {
                        mu = parse_real(val, lineno, col, key);
                        have_mu = true;
                    } else if (key == "cf_scale") {
                        cf.scale = parse_real(val, lineno, col, key);
                    } else if (key == "cf_exponent") {
                        cf.exponent = parse_real(val, lineno, col, key);
                    } else {
                        throw ParseError("unknown header key '" + key + "'", lineno, pos + 1);
                    }
                }
                pos = end;
            }
            continue;
        }
        std::vector<double> row;
        std::size_t pos = first;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t\r,", pos);
            if (pos == std::string::npos) {
                break;
            }
            const auto end = std::min(line.find_first_of(" \t\r,", pos), line.size());
            row.push_back(parse_real(line.substr(pos, end - pos), lineno, pos + 1, "matrix entry"));
            pos = end;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("row length differs from the first row", lineno, first + 1);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("matrix file has no rows", lineno, 1);
    }
    if (rows.size() != rows.front().size()) {
        throw ParseError("matrix is not square", lineno, 1);
    }
    if (!have_mu) {
        throw ParseError("missing '# mu=' growth certificate", 1, 1);
    }
    if (!(cf.scale > 0.0) || cf.exponent < 0.0) {
        throw ParseError("cf_scale must be positive and cf_exponent non-negative", 1, 1);
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    Symbol sym = make_resolvent(a, mu, cf);
    return Symbol("resolvent:" + path,
                  [sym](cplx s) -> Value { return sym(s); }, mu, cf, n, n, true);
}

Symbol parse_symbol_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ParseError("expected '<kind>:<argument>' in symbol spec '" + spec + "'", 1,
                         spec.size() + 1);
    }
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    const std::size_t col = colon + 2;
    if (kind == "power") {
        return make_power(parse_real(arg, 1, col, "power exponent"));
    }
    if (kind == "delay" || kind == "decay") {
        const double x = parse_real(arg, 1, col, kind + " parameter");
        if (!(x > 0.0)) {
            throw ParseError(kind + " parameter must be positive", 1, col);
        }
        return kind == "delay" ? make_delay(x) : make_decay(x);
    }
    if (kind == "resolvent") {
        if (arg.empty()) {
            throw ParseError("expected a matrix file path", 1, col);
        }
        return load_resolvent_file(arg);
    }
    throw ParseError("unknown symbol kind '" + kind + "'", 1, 1);
}

}  // namespace trcq
