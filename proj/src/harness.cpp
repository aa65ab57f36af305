#include "mahjb/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mahjb/quadrature.hpp"

namespace mahjb {

ErrorNorms error_norms(const DiscreteScalar& u_h, const DiscreteVector& w_h,
                       const ProblemSpec& p, const Mesh& m)
{
    (void)w_h;  // errors are measured on the primal variable
    const QuadratureRule& quad = interior_degree5_rule();
    ErrorNorms e;
    double l2_sq = 0.0, h1_sq = 0.0;

    for (int v = 0; v < m.vertex_count(); ++v) {
        const Vec2 x = m.vertices[static_cast<std::size_t>(v)];
        e.linf = std::max(e.linf, std::abs(p.u_exact(x) - u_h.vertex_value(v)));
    }
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const Vec2 grad_uh = element_gradient(u_h, t);
        for (const auto& qp : quad.points) {
            const Vec2 x = qp.bary[0] * verts[0] + qp.bary[1] * verts[1] + qp.bary[2] * verts[2];
            if (p.singular_distance(x) <= 0.0)
                throw std::runtime_error("error sampling hit a singular-set point");
            const double du = p.u_exact(x) - value_at(u_h, t, qp.bary);
            const Vec2 dg = p.grad_u_exact(x) - grad_uh;
            const double weight = qp.weight * 2.0 * area;
            l2_sq += weight * du * du;
            h1_sq += weight * dot(dg, dg);
            e.linf = std::max(e.linf, std::abs(du));
        }
    }
    e.l2 = std::sqrt(l2_sq);
    e.h1 = std::sqrt(h1_sq);
    return e;
}

namespace {

ConvergenceRecord make_record(int example_id, double eps, int level, const SolveOutput& sol,
                              const ProblemSpec& p, const Mesh& m)
{
    ConvergenceRecord rec;
    rec.example_id = example_id;
    rec.eps = eps;
    rec.level = level;
    rec.ndof = sol.vector_space->dof_count + sol.scalar_space->dof_count;
    rec.hinv = 1.0 / mesh_size(m);
    const ErrorNorms e = error_norms(sol.u, sol.w, p, m);
    rec.err_linf = e.linf;
    rec.err_l2 = e.l2;
    rec.err_h1 = e.h1;
    rec.niter = sol.report.iterations;
    rec.converged = sol.report.converged;
    return rec;
}

}  // namespace

std::vector<ConvergenceRecord> run_convergence(int example_id, double eps, int max_level,
                                               const RunConfig& cfg)
{
    const ProblemSpec p = problem_by_id(example_id);
    std::vector<ConvergenceRecord> records;
    // Stable mesh addresses: solve outputs keep dof maps pointing into them.
    std::vector<std::unique_ptr<Mesh>> meshes;
    meshes.push_back(std::make_unique<Mesh>(initial_mesh()));
    std::vector<SolveOutput> history;

    for (int level = 0; level <= max_level; ++level) {
        if (level > 0) meshes.push_back(std::make_unique<Mesh>(refine_uniform(*meshes.back())));
        const Mesh& mesh = *meshes.back();
        std::vector<double> prolonged;
        const std::vector<double>* warm = nullptr;
        if (cfg.warm_start_levels && !history.empty()) {
            const VectorDofMap fine_space = build_vector_space(mesh);
            prolonged = prolongate(history.back().w, fine_space).coeffs;
            warm = &prolonged;
        }
        SolveOutput sol = newton_solve(p, mesh, eps, cfg.newton, warm);
        records.push_back(make_record(example_id, eps, level, sol, p, mesh));
        history.push_back(std::move(sol));
    }
    return records;
}

RateSet estimate_rates(std::span<const ConvergenceRecord> records)
{
    if (records.size() < 2) throw std::invalid_argument("need at least two records");
    RateSet r;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        r.linf.push_back(std::log2(records[i].err_linf / records[i + 1].err_linf));
        r.l2.push_back(std::log2(records[i].err_l2 / records[i + 1].err_l2));
        r.h1.push_back(std::log2(records[i].err_h1 / records[i + 1].err_h1));
    }
    return r;
}

double fitted_rate(std::span<const double> errors)
{
    const std::size_t n = errors.size();
    if (n < 2) throw std::invalid_argument("need at least two errors");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        const double y = std::log2(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nn = static_cast<double>(n);
    return -(nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

RateTable eps_sweep(int example_id, std::span<const double> eps_list, int level, int finer_level,
                    const RunConfig& cfg)
{
    if (finer_level <= level) throw std::invalid_argument("finer level must exceed level");
    const ProblemSpec p = problem_by_id(example_id);

    Mesh mesh = initial_mesh();
    for (int l = 0; l < level; ++l) mesh = refine_uniform(mesh);
    Mesh finer = mesh;
    for (int l = level; l < finer_level; ++l) finer = refine_uniform(finer);

    RateTable table;
    table.example_id = example_id;
    table.level = level;
    table.finer_level = finer_level;

    auto errors_for = [&](const Mesh& m) {
        std::vector<double> linf;
        const std::vector<SolveOutput> sols = continuation_solve(p, m, eps_list, cfg.newton);
        linf.reserve(sols.size());
        for (const auto& s : sols) linf.push_back(error_norms(s.u, s.w, p, m).linf);
        return linf;
    };
    const std::vector<double> coarse_err = errors_for(mesh);
    const std::vector<double> fine_err = errors_for(finer);

    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        RateRow row;
        row.eps = eps_list[i];
        row.err_level = coarse_err[i];
        row.err_finer = fine_err[i];
        if (i > 0) {
            row.rate = std::log2(fine_err[i - 1] / fine_err[i]);
            row.has_rate = true;
        }
        table.rows.push_back(row);
    }
    return table;
}

void emit_dat(std::span<const ConvergenceRecord> records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "ndof hinv Linferr L2err H1err niter\n";
    char buf[32];
    auto field = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.16e", v);
        out << "   " << buf;
    };
    for (const auto& rec : records) {
        field(static_cast<double>(rec.ndof));
        field(rec.hinv);
        field(rec.err_linf);
        field(rec.err_l2);
        field(rec.err_h1);
        field(static_cast<double>(rec.niter));
        out << "\n";
    }
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

void emit_csv(std::span<const ConvergenceRecord> records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "ndof,hinv,Linferr,L2err,H1err,niter\n";
    char buf[32];
    for (const auto& rec : records) {
        auto field = [&](double v) {
            std::snprintf(buf, sizeof buf, "%.16e", v);
            return std::string(buf);
        };
        out << rec.ndof << ',' << field(rec.hinv) << ',' << field(rec.err_linf) << ','
            << field(rec.err_l2) << ',' << field(rec.err_h1) << ',' << rec.niter << "\n";
    }
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<ConvergenceRecord> parse_dat(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::vector<ConvergenceRecord> records;
    double ndof, hinv, linf, l2, h1, niter;
    while (in >> ndof >> hinv >> linf >> l2 >> h1 >> niter) {
        ConvergenceRecord rec;
        rec.ndof = static_cast<int>(ndof);
        rec.hinv = hinv;
        rec.err_linf = linf;
        rec.err_l2 = l2;
        rec.err_h1 = h1;
        rec.niter = static_cast<int>(niter);
        records.push_back(rec);
    }
    return records;
}

void print_rate_table(const RateTable& table, std::FILE* out)
{
    std::fprintf(out, "# example %d, Linf errors at levels %d and %d, halving rates on level %d\n",
                 table.example_id, table.level, table.finer_level, table.finer_level);
    std::fprintf(out, "%-14s %-14s %-14s %s\n", "eps", "err_level", "err_finer", "rate");
    for (const auto& row : table.rows) {
        if (row.has_rate)
            std::fprintf(out, "%-14.6e %-14.6e %-14.6e %.2f\n", row.eps, row.err_level,
                         row.err_finer, row.rate);
        else
            std::fprintf(out, "%-14.6e %-14.6e %-14.6e ---\n", row.eps, row.err_level,
                         row.err_finer);
    }
}

}  // namespace mahjb
