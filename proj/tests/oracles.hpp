#pragma once

// Test-only reference computations, independent of the library's evaluation
// paths: a grid-and-refine maximizer over the admissible control set, finite
// differences, and a dense Gaussian elimination.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mahjb/geometry.hpp"

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

/// Objective at A = R(theta) diag(t, 1-t) R(theta)^T, built entrywise so the
/// computation shares nothing with the eigen-decomposition route.
inline double control_objective(double f_val, const mahjb::Mat2& m, double t, double theta,
                                bool scaled)
{
    const double c = std::cos(theta), s = std::sin(theta);
    const double a00 = t * c * c + (1.0 - t) * s * s;
    const double a11 = t * s * s + (1.0 - t) * c * c;
    const double a01 = (2.0 * t - 1.0) * c * s;
    const double contraction = a00 * m.a00 + a01 * (m.a01 + m.a10) + a11 * m.a11;
    const double det_a = a00 * a11 - a01 * a01;
    double value = -contraction + 2.0 * std::sqrt(std::max(0.0, f_val * det_a));
    if (scaled) value *= (a00 + a11) / (a00 * a00 + 2.0 * a01 * a01 + a11 * a11);
    return value;
}

inline double golden_max(const std::function<double(double)>& f, double a, double b, int iters)
{
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

/// Brute-force sup over the admissible set: dense (t, theta) grid followed by
/// alternating golden refinements of both coordinates.
inline double grid_sup(double f_val, const mahjb::Mat2& m, double eps, bool scaled,
                       int nt = 4096, int ntheta = 64)
{
    const double lo = eps, hi = 1.0 - eps;
    double best = -1e300, bt = 0.5, btheta = 0.0;
    for (int i = 0; i < nt; ++i) {
        const double t = nt == 1 ? 0.5 : lo + (hi - lo) * i / (nt - 1.0);
        for (int j = 0; j < ntheta; ++j) {
            const double theta = kPi * j / ntheta;
            const double v = control_objective(f_val, m, t, theta, scaled);
            if (v > best) {
                best = v;
                bt = t;
                btheta = theta;
            }
        }
    }
    const double dt = (hi - lo) / std::max(nt - 1, 1);
    const double dth = kPi / ntheta;
    for (int round = 0; round < 3; ++round) {
        bt = golden_max([&](double t) { return control_objective(f_val, m, t, btheta, scaled); },
                        std::max(lo, bt - 2.0 * dt), std::min(hi, bt + 2.0 * dt), 70);
        btheta = golden_max(
            [&](double th) { return control_objective(f_val, m, bt, th, scaled); },
            btheta - 2.0 * dth, btheta + 2.0 * dth, 70);
        best = std::max(best, control_objective(f_val, m, bt, btheta, scaled));
    }
    return best;
}

/// Plain scan of phi over [eps, 1-eps].
inline std::pair<double, double> grid_max_phi(double rho1, double rho2, double zeta, double eps,
                                              int n = 1000000)
{
    double best = -1e300, bt = eps;
    for (int i = 0; i < n; ++i) {
        const double t = eps + (1.0 - 2.0 * eps) * i / (n - 1.0);
        const double v = -t * rho1 - (1.0 - t) * rho2 + zeta * std::sqrt(t * (1.0 - t));
        if (v > best) {
            best = v;
            bt = t;
        }
    }
    return {bt, best};
}

inline mahjb::Vec2 central_gradient(const std::function<double(mahjb::Vec2)>& f, mahjb::Vec2 x,
                                    double h)
{
    return {(f({x.x + h, x.y}) - f({x.x - h, x.y})) / (2.0 * h),
            (f({x.x, x.y + h}) - f({x.x, x.y - h})) / (2.0 * h)};
}

inline mahjb::Mat2 central_hessian(const std::function<double(mahjb::Vec2)>& f, mahjb::Vec2 x,
                                   double h)
{
    const double fxx =
        (f({x.x + h, x.y}) - 2.0 * f(x) + f({x.x - h, x.y})) / (h * h);
    const double fyy =
        (f({x.x, x.y + h}) - 2.0 * f(x) + f({x.x, x.y - h})) / (h * h);
    const double fxy = (f({x.x + h, x.y + h}) - f({x.x + h, x.y - h}) - f({x.x - h, x.y + h}) +
                        f({x.x - h, x.y - h})) /
                       (4.0 * h * h);
    return {fxx, fxy, fxy, fyy};
}

/// Dense Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        if (a[k][k] == 0.0) throw std::runtime_error("dense oracle: singular matrix");
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            b[i] -= factor * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double a, double b)
    {
        return std::uniform_real_distribution<double>(a, b)(gen);
    }
    mahjb::Mat2 symmetric(double scale)
    {
        const double a = uniform(-scale, scale);
        const double b = uniform(-scale, scale);
        const double c = uniform(-scale, scale);
        return {a, b, b, c};
    }
    mahjb::Mat2 general(double scale)
    {
        return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
                uniform(-scale, scale)};
    }
    mahjb::Mat2 psd(double scale)
    {
        const mahjb::Mat2 b = general(scale);
        // B^T B
        return {b.a00 * b.a00 + b.a10 * b.a10, b.a00 * b.a01 + b.a10 * b.a11,
                b.a00 * b.a01 + b.a10 * b.a11, b.a01 * b.a01 + b.a11 * b.a11};
    }
};

}  // namespace oracle
