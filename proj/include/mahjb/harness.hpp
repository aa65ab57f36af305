#pragma once

#include <span>
#include <string>
#include <vector>

#include "mahjb/problems.hpp"
#include "mahjb/solver.hpp"

namespace mahjb {

struct ErrorNorms {
    double linf = 0.0;
    double l2 = 0.0;
    double h1 = 0.0;
};

/// Errors against the exact solution: L2 and H1-seminorm by the degree-5
/// interior rule, L-infinity sampled at all mesh vertices and all degree-5
/// quadrature points (a lower bound of the true sup norm).
ErrorNorms error_norms(const DiscreteScalar& u_h, const DiscreteVector& w_h,
                       const ProblemSpec& p, const Mesh& m);

struct ConvergenceRecord {
    int example_id = 0;
    double eps = 0.0;
    int level = 0;
    int ndof = 0;  // dim W_h + dim V_h (free unknowns)
    double hinv = 0.0;
    double err_linf = 0.0;
    double err_l2 = 0.0;
    double err_h1 = 0.0;
    int niter = 0;
    bool converged = true;
};

struct RunConfig {
    bool warm_start_levels = false;  // prolongate the coarse solve as initial guess
    NewtonConfig newton;
};

/// One record per refinement level 0..max_level. Solver failures are recorded
/// in the row and the sweep continues.
std::vector<ConvergenceRecord> run_convergence(int example_id, double eps, int max_level,
                                               const RunConfig& cfg = {});

struct RateSet {
    std::vector<double> linf, l2, h1;  // rate_l = log2(err_l / err_{l+1})
};

RateSet estimate_rates(std::span<const ConvergenceRecord> records);

/// Least-squares slope of log2(err) against the level over the given records.
double fitted_rate(std::span<const double> errors);

struct RateRow {
    double eps = 0.0;
    double err_level = 0.0;  // L-infinity error on the coarser of the two meshes
    double err_finer = 0.0;
    double rate = 0.0;  // log2(err_finer at 2*eps / err_finer at eps)
    bool has_rate = false;
};

struct RateTable {
    int example_id = 0;
    int level = 0;
    int finer_level = 0;
    std::vector<RateRow> rows;
};

/// Regularization study: solve at two fixed levels for each parameter of the
/// halving list (descending), reporting errors and the halving rates taken on
/// the finer mesh.
RateTable eps_sweep(int example_id, std::span<const double> eps_list, int level, int finer_level,
                    const RunConfig& cfg = {});

/// Whitespace-separated columns "ndof hinv Linferr L2err H1err niter", one
/// header line, %.16e values, LF line endings.
void emit_dat(std::span<const ConvergenceRecord> records, const std::string& path);
void emit_csv(std::span<const ConvergenceRecord> records, const std::string& path);
std::vector<ConvergenceRecord> parse_dat(const std::string& path);

void print_rate_table(const RateTable& table, std::FILE* out);

}  // namespace mahjb
