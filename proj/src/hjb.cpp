#include "mahjb/hjb.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace mahjb {

namespace {

void check_eps(double eps)
{
    if (!(eps > 0.0) || !(eps <= 0.5))
        throw std::invalid_argument("regularization parameter must lie in (0, 1/2]");
}

Mat2 control_from(const SymEig2& eig, double t)
{
    // t weights the eigenvector of the smaller eigenvalue.
    return t * outer(eig.q1, eig.q1) + (1.0 - t) * outer(eig.q2, eig.q2);
}

}  // namespace

SymEig2 sym_eig2(const Mat2& m)
{
    const Mat2 s = sym(m);
    const double mean = 0.5 * (s.a00 + s.a11);
    const double h = 0.5 * (s.a00 - s.a11);
    const double b = s.a01;
    const double r = std::hypot(h, b);

    SymEig2 eig;
    eig.rho1 = mean - r;
    eig.rho2 = mean + r;
    if (r == 0.0) return eig;  // multiple eigenvalue: canonical axis-aligned basis

    // Eigenvector of rho2, picked from the numerically larger column.
    Vec2 v = (h >= 0.0) ? Vec2{r + h, b} : Vec2{b, r - h};
    const double n = norm(v);
    if (n == 0.0) return eig;
    eig.q2 = (1.0 / n) * v;
    eig.q1 = {-eig.q2.y, eig.q2.x};
    return eig;
}

PhiMax maximize_phi(double rho1, double rho2, double zeta, double eps)
{
    check_eps(eps);
    assert(rho1 <= rho2);
    assert(zeta >= 0.0);

    const double d = rho2 - rho1;
    double t = 1.0 - eps;
    if (zeta > 0.0) {
        const double ratio = d / zeta;
        const double s = ratio / std::sqrt(1.0 + ratio * ratio);
        t = std::clamp(0.5 * (1.0 + s), eps, 1.0 - eps);
    }
    const double value = -t * rho1 - (1.0 - t) * rho2 + zeta * std::sqrt(t * (1.0 - t));
    return {t, value};
}

HjbEval f_eps(double f_val, const Mat2& m, double eps)
{
    check_eps(eps);
    if (f_val < 0.0) throw std::invalid_argument("f must be nonnegative");

    const SymEig2 eig = sym_eig2(m);
    const PhiMax mx = maximize_phi(eig.rho1, eig.rho2, 2.0 * std::sqrt(f_val), eps);
    return {mx.value, mx.t_star, control_from(eig, mx.t_star), false};
}

namespace {

// g(t) = phi(t) / q(t) with q(t) = t^2 + (1-t)^2 and its critical-point
// residual r(t) = phi'(t) q(t) - phi(t) q'(t); r'(t) = phi'' q - phi q''.
struct ScaledObjective {
    double rho1, rho2, zeta, d;

    double phi(double t) const
    {
        return -rho2 + d * t + zeta * std::sqrt(t * (1.0 - t));
    }
    double g(double t) const { return phi(t) / (2.0 * t * t - 2.0 * t + 1.0); }
    double crit(double t) const
    {
        const double s = std::sqrt(t * (1.0 - t));
        const double dphi = d + zeta * (1.0 - 2.0 * t) / (2.0 * s);
        const double q = 2.0 * t * t - 2.0 * t + 1.0;
        return dphi * q - phi(t) * (4.0 * t - 2.0);
    }
    double crit_deriv(double t) const
    {
        const double s = std::sqrt(t * (1.0 - t));
        const double d2phi = -zeta / (4.0 * s * s * s);
        const double q = 2.0 * t * t - 2.0 * t + 1.0;
        return d2phi * q - 4.0 * phi(t);
    }
};

}  // namespace

HjbEval f_gamma_eps(double f_val, const Mat2& m, double eps)
{
    check_eps(eps);
    if (f_val < 0.0) throw std::invalid_argument("f must be nonnegative");

    const SymEig2 eig = sym_eig2(m);
    const double zeta = 2.0 * std::sqrt(f_val);
    const double lo = eps, hi = 1.0 - eps;
    const ScaledObjective obj{eig.rho1, eig.rho2, zeta, eig.rho2 - eig.rho1};

    auto finish = [&](double t) -> HjbEval {
        return {obj.g(t), t, control_from(eig, t), true};
    };
    if (hi - lo < 1e-14) return finish(0.5);

    // Pre-scan: uniform grid, geometric clusters near both endpoints (the
    // square-root term steepens there), and the unscaled maximizer as seed.
    double scan[48];
    int n = 0;
    scan[n++] = lo;
    scan[n++] = hi;
    for (int k = 1; k <= 16; ++k) scan[n++] = lo + (hi - lo) * k / 17.0;
    for (int j = 5; j <= 14; ++j) {
        const double off = (hi - lo) * std::ldexp(1.0, -j);
        scan[n++] = lo + off;
        scan[n++] = hi - off;
    }
    scan[n++] = maximize_phi(eig.rho1, eig.rho2, zeta, eps).t_star;
    std::sort(scan, scan + n);

    int best = 0;
    double best_val = obj.g(scan[0]);
    for (int k = 1; k < n; ++k) {
        const double v = obj.g(scan[k]);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }

    double t_best = scan[best];
    double g_best = best_val;
    auto consider = [&](double t) {
        const double v = obj.g(t);
        if (v > g_best) {
            g_best = v;
            t_best = t;
        }
    };

    // Golden-section within the bracket around the scan winner, then Newton
    // polish on the critical-point residual.
    double a = scan[std::max(best - 1, 0)];
    double b = scan[std::min(best + 1, n - 1)];
    if (b > a) {
        constexpr double inv_phi = 0.6180339887498949;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = obj.g(x1), f2 = obj.g(x2);
        for (int it = 0; it < 28; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = obj.g(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = obj.g(x1);
            }
        }
        double t = 0.5 * (a + b);
        consider(t);
        for (int it = 0; it < 12; ++it) {
            const double rc = obj.crit(t);
            const double rd = obj.crit_deriv(t);
            if (rd == 0.0) break;
            const double t_next = std::clamp(t - rc / rd, lo, hi);
            const double step = std::abs(t_next - t);
            t = t_next;
            consider(t);
            if (step < 1e-13) break;
        }
    }
    return finish(t_best);
}

CordesConstants cordes_constants(double eps)
{
    check_eps(eps);
    CordesConstants c;
    c.eps = eps;
    c.delta = 2.0 * eps * (1.0 - eps) / (eps * eps + (1.0 - eps) * (1.0 - eps));
    const double root = std::sqrt(1.0 - c.delta);
    c.big_c = (1.0 + std::sqrt(2.0)) / (1.0 - root);
    c.c3 = (eps * eps + (1.0 - eps) * (1.0 - eps)) / (1.0 - eps);
    c.sigma = 1.0 - 0.5 * root;
    c.c_mon = 1.0 - root;
    return c;
}

double interior_maximizer_threshold(double zeta, double eps)
{
    check_eps(eps);
    assert(zeta >= 0.0);
    const double q = eps * eps + (1.0 - eps) * (1.0 - eps);
    return q * zeta * zeta / (4.0 * eps * (1.0 - eps));
}

}  // namespace mahjb
