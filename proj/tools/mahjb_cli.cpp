#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mahjb/harness.hpp"

namespace {

constexpr int kExitSolverFailure = 2;
constexpr int kExitInvalidConfig = 3;

std::vector<double> parse_eps_list(const std::string& text)
{
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        values.push_back(std::stod(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (double e : values)
        if (!(e > 0.0) || !(e <= 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2]");
    return values;
}

std::string dat_name(int example, double eps)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "convhist_ex%d_eps%g.dat", example, eps);
    return buf;
}

int run_solve(int example, const std::string& eps_text, int max_level, bool continuation,
              const std::string& out_dir, const std::string& format, double newton_tol,
              int max_iter, bool quiet)
{
    const std::vector<double> eps_list = parse_eps_list(eps_text);
    mahjb::RunConfig cfg;
    cfg.warm_start_levels = continuation;
    cfg.newton.max_iter = max_iter;
    if (newton_tol > 0.0) cfg.newton.tol_abs = newton_tol;
    cfg.newton.verbose = false;

    bool any_failure = false;
    for (double eps : eps_list) {
        const auto records = mahjb::run_convergence(example, eps, max_level, cfg);
        for (const auto& rec : records) {
            if (!rec.converged) any_failure = true;
            if (!quiet)
                std::printf("example %d eps %-9g level %d  hinv %-6g Linf %.6e L2 %.6e H1 %.6e niter %d%s\n",
                            example, eps, rec.level, rec.hinv, rec.err_linf, rec.err_l2,
                            rec.err_h1, rec.niter, rec.converged ? "" : "  [not converged]");
        }
        const std::string path = out_dir + "/" + dat_name(example, eps) +
                                 (format == "csv" ? ".csv" : "");
        if (format == "csv")
            mahjb::emit_csv(records, path);
        else
            mahjb::emit_dat(records, path);
        if (!quiet) std::printf("wrote %s\n", path.c_str());
    }
    return any_failure ? kExitSolverFailure : 0;
}

int run_rates(const std::string& in_path)
{
    const auto records = mahjb::parse_dat(in_path);
    if (records.size() < 2) {
        std::fprintf(stderr, "need at least two rows to form rates\n");
        return kExitInvalidConfig;
    }
    const auto rates = mahjb::estimate_rates(records);
    std::printf("%-10s %-8s %-8s %-8s\n", "hinv", "Linf", "L2", "H1");
    for (std::size_t i = 0; i < rates.linf.size(); ++i)
        std::printf("%-10g %-8.3f %-8.3f %-8.3f\n", records[i + 1].hinv, rates.linf[i],
                    rates.l2[i], rates.h1[i]);
    return 0;
}

int run_eps_sweep(int example, int level, int finer_level, const std::string& eps_text,
                  const std::string& out_path)
{
    std::vector<double> eps_list;
    if (eps_text.empty()) {
        for (int j = 1; j <= 11; ++j) eps_list.push_back(std::ldexp(1.0, -j));
    } else {
        eps_list = parse_eps_list(eps_text);
    }
    const mahjb::RateTable table = mahjb::eps_sweep(example, eps_list, level, finer_level, {});
    mahjb::print_rate_table(table, stdout);
    if (!out_path.empty()) {
        std::FILE* f = std::fopen(out_path.c_str(), "wb");
        if (f == nullptr) {
            std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
            return kExitInvalidConfig;
        }
        mahjb::print_rate_table(table, f);
        std::fclose(f);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mixed finite element solver for the planar Monge-Ampere equation via "
                 "regularized Bellman reformulation"};
    app.require_subcommand(1);

    int example = 1;
    std::string eps_text = "0.01";
    int max_level = 4;
    bool continuation = false;
    std::string out_dir = ".";
    std::string format = "dat";
    double newton_tol = -1.0;
    int max_iter = 50;
    bool quiet = false;

    auto* solve = app.add_subcommand("solve", "Run a refinement sweep and emit data tables");
    solve->add_option("--example", example, "benchmark id")->required()->check(CLI::Range(1, 4));
    solve->add_option("--eps", eps_text, "comma-separated regularization parameters");
    solve->add_option("--max-level", max_level, "finest refinement level")
        ->check(CLI::Range(0, 10));
    solve->add_flag("--continuation", continuation, "warm-start each level from the previous one");
    solve->add_option("--out", out_dir, "output directory");
    solve->add_option("--format", format, "dat or csv")
        ->check(CLI::IsMember({"dat", "csv"}));
    solve->add_option("--newton-tol", newton_tol, "absolute residual tolerance");
    solve->add_option("--max-iter", max_iter, "iteration cap");
    solve->add_flag("--quiet", quiet, "suppress per-level output");

    std::string rates_in;
    auto* rates = app.add_subcommand("rates", "Print per-norm convergence rates of a data table");
    rates->add_option("--in", rates_in, "data file written by solve")->required();

    int sweep_example = 3;
    int sweep_level = 5;
    int sweep_finer = 6;
    std::string sweep_eps;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("eps-sweep", "Regularization-rate study on two fixed meshes");
    sweep->add_option("--example", sweep_example, "benchmark id")->required()->check(CLI::Range(1, 4));
    sweep->add_option("--level", sweep_level, "coarser level")->required();
    sweep->add_option("--finer-level", sweep_finer, "finer level")->required();
    sweep->add_option("--eps", sweep_eps, "comma-separated list (default 2^-1..2^-11)");
    sweep->add_option("--out", sweep_out, "also write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    }

    try {
        if (solve->parsed())
            return run_solve(example, eps_text, max_level, continuation, out_dir, format,
                             newton_tol, max_iter, quiet);
        if (rates->parsed()) return run_rates(rates_in);
        if (sweep->parsed())
            return run_eps_sweep(sweep_example, sweep_level, sweep_finer, sweep_eps, sweep_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSolverFailure;
    }
    return kExitInvalidConfig;
}
