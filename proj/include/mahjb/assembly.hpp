#pragma once

#include <cstdint>
#include <vector>

#include "mahjb/geometry.hpp"
#include "mahjb/problems.hpp"
#include "mahjb/quadrature.hpp"
#include "mahjb/sparse.hpp"
#include "mahjb/spaces.hpp"

namespace mahjb {

/// Maximizer data of the scaled operator at one quadrature point, kept for
/// the Newton linearization.
struct QuadPointEval {
    double gamma = 0.0;  // gamma(A*) = 1/(t*^2 + (1-t*)^2)
    double t_star = 0.0;
    Mat2 control;
};

struct AssemblyCache {
    const Mesh* mesh = nullptr;
    double eps = 0.0;
    int points_per_tri = 0;
    std::uint64_t field_hash = 0;
    std::vector<QuadPointEval> evals;
};

struct AssembledResidual {
    std::vector<double> r;  // r_i = a(w, z_i)
    AssemblyCache cache;
};

/// Residual of the semilinear form
///   a(w,z) = -int F_scaled(f; x, D(w) + H_g(x)) div z dx + sigma int rot w rot z dx
/// evaluated against every basis field of the vector space. Throws if f is
/// negative at a quadrature point (the point is named in the message).
AssembledResidual assemble_residual(const DiscreteVector& w, const ProblemSpec& p, double eps,
                                    const QuadratureRule& quad);

/// Generalized derivative of the residual at w using the cached maximizers:
///   B(dw, z) = int gamma(A*) (A* : sym D dw) div z dx + sigma int rot dw rot z dx.
/// Row i, column j holds B(basis_j, basis_i).
SparseMatrix assemble_jacobian(const DiscreteVector& w, const AssemblyCache& cache,
                               const ProblemSpec& p, double eps, const QuadratureRule& quad);

/// P1 stiffness matrix on the zero-trace scalar space; symmetric positive
/// definite. The integrand is elementwise constant, so the rule only fixes
/// the interface.
SparseMatrix assemble_poisson(const ScalarDofMap& vs, const QuadratureRule& quad);

/// Load vector (w + grad g, grad v_i) for the projection step.
std::vector<double> poisson_rhs(const DiscreteVector& w, const ProblemSpec& p,
                                const ScalarDofMap& vs, const QuadratureRule& quad);

/// Stiffness coupling of the boundary interpolant of g against the free basis:
/// subtracted from the load when projecting with inhomogeneous data.
std::vector<double> poisson_dirichlet_lift(const ScalarDofMap& vs, const ProblemSpec& p);

std::uint64_t field_hash(const DiscreteVector& w);

}  // namespace mahjb
