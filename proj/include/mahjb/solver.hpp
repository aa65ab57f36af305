#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mahjb/assembly.hpp"
#include "mahjb/mesh.hpp"
#include "mahjb/problems.hpp"
#include "mahjb/spaces.hpp"

namespace mahjb {

struct NewtonConfig {
    double tol_abs = 1e-11;
    double tol_rel = 1e-10;
    int max_iter = 50;
    bool verbose = false;
};

struct NewtonReport {
    int iterations = 0;  // linear solves, including the cold-start initialization
    std::vector<double> residual_history;
    bool converged = false;
    double eps = 0.0;
};

/// Solution of the discrete mixed problem. Owns the dof maps the fields point
/// into, so it stays valid after the call; the mesh must outlive it.
struct SolveOutput {
    std::shared_ptr<VectorDofMap> vector_space;
    std::shared_ptr<ScalarDofMap> scalar_space;
    DiscreteVector w;
    DiscreteScalar u;
    NewtonReport report;
};

/// Semismooth Newton iteration for the gradient variable, followed by the
/// Poisson projection recovering u. The cold start solves the eps = 1/2
/// problem (linear: the admissible set is a singleton); a warm start skips it.
/// Non-convergence is reported through the flag, with the residual history and
/// the last iterate retained.
SolveOutput newton_solve(const ProblemSpec& p, const Mesh& m, double eps, NewtonConfig cfg = {},
                         const std::vector<double>* warm_w = nullptr);

/// u in g + V_h with (grad u, grad v) = (w + grad g, grad v) for all v in V_h;
/// boundary nodal values are set to g exactly.
DiscreteScalar poisson_project(const DiscreteVector& w, const ProblemSpec& p,
                               const ScalarDofMap& vs, const QuadratureRule& quad);

/// Solves for each parameter of the descending list, warm-starting every solve
/// from the previous gradient iterate.
std::vector<SolveOutput> continuation_solve(const ProblemSpec& p, const Mesh& m,
                                            std::span<const double> eps_list,
                                            NewtonConfig cfg = {});

}  // namespace mahjb
