#pragma once

#include "mahjb/geometry.hpp"

namespace mahjb {

/// Ordered eigen-decomposition of the symmetric part of a 2x2 matrix.
/// Q diag(rho1, rho2) Q^T reconstructs sym(M), with Q = [q1 q2] orthonormal.
struct SymEig2 {
    double rho1 = 0.0;  // smaller eigenvalue
    double rho2 = 0.0;
    Vec2 q1{1.0, 0.0};
    Vec2 q2{0.0, 1.0};
};

SymEig2 sym_eig2(const Mat2& m);

struct PhiMax {
    double t_star = 0.0;
    double value = 0.0;
};

/// Maximize phi(t) = -t*rho1 - (1-t)*rho2 + zeta*sqrt(t*(1-t)) over [eps, 1-eps].
/// Requires rho1 <= rho2, zeta >= 0, 0 < eps <= 1/2. Closed form: for zeta > 0
/// the unconstrained maximizer is (1+s)/2 with s = (d/zeta)/sqrt(1+(d/zeta)^2),
/// d = rho2 - rho1, clamped to the interval; for zeta = 0 phi is nondecreasing
/// and the maximum sits at 1-eps.
PhiMax maximize_phi(double rho1, double rho2, double zeta, double eps);

/// Result of one pointwise operator evaluation. The control is the maximizing
/// admissible coefficient: symmetric, unit trace, eigenvalues in [eps, 1-eps];
/// t_star is its eigenvalue paired with the smaller eigenvalue of sym(M).
struct HjbEval {
    double value = 0.0;
    double t_star = 0.0;
    Mat2 control = Mat2::identity();
    bool scaled = false;
};

/// Regularized Bellman operator: sup over admissible A of -A:M + 2*sqrt(f*det A).
/// Nonsymmetric M is symmetrized (A:M = A:sym(M) for symmetric A).
HjbEval f_eps(double f_val, const Mat2& m, double eps);

/// Cordes-scaled operator: sup of gamma(A) * (-A:M + 2*sqrt(f*det A)) with
/// gamma(A) = tr(A)/|A|^2. Reduces to a 1d maximization of
/// g(t) = phi(t)/(t^2+(1-t)^2); solved by a guarded scan plus Newton polish.
HjbEval f_gamma_eps(double f_val, const Mat2& m, double eps);

struct CordesConstants {
    double eps = 0.0;
    double delta = 0.0;  // 2*eps*(1-eps)/(eps^2+(1-eps)^2)
    double big_c = 0.0;  // (1+sqrt(2))/(1-sqrt(1-delta))
    double c3 = 0.0;     // ((1-eps)^2+eps^2)/(1-eps)
    double sigma = 0.0;  // 1 - sqrt(1-delta)/2, stabilization weight
    double c_mon = 0.0;  // 1 - sqrt(1-delta), monotonicity constant
};

CordesConstants cordes_constants(double eps);

/// Threshold psi(eps) = ((1-eps)^2+eps^2)*zeta^2/(4*eps*(1-eps)): for matrices
/// with vanishing unregularized sup, the maximizer stays admissible iff
/// |M|^2 <= psi(eps).
double interior_maximizer_threshold(double zeta, double eps);

}  // namespace mahjb
