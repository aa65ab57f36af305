#include "mahjb/solver.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mahjb/hjb.hpp"
#include "mahjb/quadrature.hpp"

namespace mahjb {

namespace {

double l2_norm(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

DiscreteScalar poisson_project(const DiscreteVector& w, const ProblemSpec& p,
                               const ScalarDofMap& vs, const QuadratureRule& quad)
{
    const Mesh& m = *vs.mesh;
    const SparseMatrix stiffness = assemble_poisson(vs, quad);
    std::vector<double> rhs = poisson_rhs(w, p, vs, quad);
    const std::vector<double> lift = poisson_dirichlet_lift(vs, p);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= lift[i];

    DiscreteScalar u;
    u.space = &vs;
    u.coeffs = solve_spd(stiffness, rhs);
    u.boundary_values.assign(m.vertices.size(), 0.0);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (vs.vertex_dof[static_cast<std::size_t>(v)] == kConstrained)
            u.boundary_values[static_cast<std::size_t>(v)] =
                p.g(m.vertices[static_cast<std::size_t>(v)]);
    return u;
}

SolveOutput newton_solve(const ProblemSpec& p, const Mesh& m, double eps, NewtonConfig cfg,
                         const std::vector<double>* warm_w)
{
    if (!(eps > 0.0) || !(eps <= 0.5))
        throw std::invalid_argument("regularization parameter must lie in (0, 1/2]");
    const QuadratureRule& quad = interior_degree2_rule();

    SolveOutput out;
    out.vector_space = std::make_shared<VectorDofMap>(build_vector_space(m));
    out.scalar_space = std::make_shared<ScalarDofMap>(build_scalar_space(m));
    out.report.eps = eps;

    DiscreteVector w;
    w.space = out.vector_space.get();
    w.coeffs.assign(static_cast<std::size_t>(out.vector_space->dof_count), 0.0);

    if (warm_w != nullptr) {
        if (warm_w->size() != w.coeffs.size())
            throw std::invalid_argument("warm start has wrong dof count");
        w.coeffs = *warm_w;
    } else {
        // One Newton step at eps = 1/2 from zero lands on the solution of the
        // linear singleton-control problem.
        const AssembledResidual init = assemble_residual(w, p, 0.5, quad);
        const SparseMatrix jac = assemble_jacobian(w, init.cache, p, 0.5, quad);
        const std::vector<double> step = solve_linear(jac, init.r);
        for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] -= step[i];
        out.report.iterations = 1;
    }

    double step_scale = 1.0;
    int growth_streak = 0;
    double reference = -1.0;
    while (true) {
        const AssembledResidual res = assemble_residual(w, p, eps, quad);
        const double rnorm = l2_norm(res.r);
        if (reference < 0.0) reference = rnorm;
        if (!out.report.residual_history.empty() &&
            rnorm > out.report.residual_history.back()) {
            if (++growth_streak >= 3) step_scale = std::max(0.5 * step_scale, 1.0 / 64.0);
        } else {
            growth_streak = 0;
            step_scale = std::min(1.0, 2.0 * step_scale);
        }
        out.report.residual_history.push_back(rnorm);
        if (cfg.verbose)
            std::fprintf(stderr, "newton eps=%g iter=%d |r|=%.3e\n", eps, out.report.iterations,
                         rnorm);
        if (rnorm <= cfg.tol_abs + cfg.tol_rel * reference) {
            out.report.converged = true;
            break;
        }
        if (out.report.iterations >= cfg.max_iter) break;

        const SparseMatrix jac = assemble_jacobian(w, res.cache, p, eps, quad);
        const std::vector<double> step = solve_linear(jac, res.r);
        for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] -= step_scale * step[i];
        ++out.report.iterations;
    }

    out.w = std::move(w);
    out.u = poisson_project(out.w, p, *out.scalar_space, quad);
    return out;
}

std::vector<SolveOutput> continuation_solve(const ProblemSpec& p, const Mesh& m,
                                            std::span<const double> eps_list, NewtonConfig cfg)
{
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (eps_list[i] > eps_list[i - 1])
            throw std::invalid_argument("continuation parameters must be descending");

    std::vector<SolveOutput> outputs;
    outputs.reserve(eps_list.size());
    const std::vector<double>* warm = nullptr;
    for (double eps : eps_list) {
        outputs.push_back(newton_solve(p, m, eps, cfg, warm));
        warm = &outputs.back().w.coeffs;
    }
    return outputs;
}

}  // namespace mahjb
