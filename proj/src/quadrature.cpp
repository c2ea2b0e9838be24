#include "trcq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trcq/errors.hpp"

namespace trcq {

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
            QuadResult& out) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double diff = left + right - p.whole;
    if (std::abs(diff) <= 15.0 * tol || depth <= 0 || !(p.b - p.a > 4.0 * std::abs(p.m) * 2.2e-16)) {
        if (std::abs(diff) > 15.0 * tol || !std::isfinite(diff)) {
            out.converged = false;
        }
        out.value += left + right + diff / 15.0;
        out.error += std::abs(diff) / 15.0;
        return;
    }
    refine(f, Panel{p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, out);
    refine(f, Panel{p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double rel_tol, double abs_floor, std::size_t panels, int max_depth) {
    QuadResult out;
    if (a == b) {
        return out;
    }
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("adaptive_simpson: need finite a < b");
    }
    panels = std::max<std::size_t>(panels, 1);
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<Panel> pieces(panels);
    double estimate = 0.0;
    double f_left = f(a);
    for (std::size_t k = 0; k < panels; ++k) {
        const double pa = a + h * static_cast<double>(k);
        const double pb = k + 1 == panels ? b : a + h * static_cast<double>(k + 1);
        const double pm = 0.5 * (pa + pb);
        const double fm = f(pm);
        const double fb = f(pb);
        pieces[k] = Panel{pa, pm, pb, f_left, fm, fb, simpson(pa, pb, f_left, fm, fb)};
        estimate += pieces[k].whole;
        f_left = fb;
    }
    const double tol = std::max(rel_tol * std::abs(estimate), abs_floor);
    for (const auto& p : pieces) {
        refine(f, p, tol / static_cast<double>(panels), max_depth, out);
    }
    return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_floor, std::size_t panels) {
    const QuadResult r = adaptive_simpson(f, a, b, rel_tol, abs_floor, panels);
    if (!r.converged) {
        throw ConvergenceError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                                   "] missed its tolerance",
                               r.error);
    }
    return r.value;
}

MinResult minimize_scan_golden(const std::function<double(double)>& f, double lo, double hi,
                               std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 3) {
        throw DomainError("minimize_scan_golden: need 0 < lo < hi and at least 3 points");
    }
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / static_cast<double>(points - 1);
    auto node = [&](std::size_t k) {
        if (k == 0) {
            return lo;
        }
        if (k + 1 == points) {
            return hi;
        }
        return std::exp(log_lo + step * static_cast<double>(k));
    };
    std::size_t best_k = 0;
    double best = f(lo);
    for (std::size_t k = 1; k < points; ++k) {
        const double v = f(node(k));
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    MinResult result{node(best_k), best};

    double a = node(best_k == 0 ? 0 : best_k - 1);
    double b = node(best_k + 1 == points ? best_k : best_k + 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a)); ++iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if (fc < result.value) {
        result = MinResult{c, fc};
    }
    if (fd < result.value) {
        result = MinResult{d, fd};
    }
    return result;
}

}  // namespace trcq
