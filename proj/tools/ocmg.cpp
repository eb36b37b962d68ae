/// Command-line runner: table reproduction and ad-hoc parameter studies for
/// the saddle-system multigrid solver and its Fourier analysis.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ocmg/assembly.hpp"
#include "ocmg/bsr.hpp"
#include "ocmg/mm_io.hpp"
#include "ocmg/report.hpp"
#include "ocmg/runner.hpp"
#include "ocmg/transfer.hpp"

namespace {

using namespace ocmg;

void add_output_options(CLI::App* cmd, ExperimentSpec& spec) {
    cmd->add_option("-o,--out", spec.output, "Output path ('-' = stdout)");
    cmd->add_option("--format", spec.format, "Output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--timing", spec.timing,
                  "Fill runtime_ms (makes output bytes run-dependent)");
}

void add_grid_options(CLI::App* cmd, ExperimentSpec& spec) {
    cmd->add_option("--beta", spec.betas, "Regularization parameter(s)")->delimiter(',');
    cmd->add_option("-n,--n", spec.ns, "Cells per side (power of two >= 8); h = 1/n")
        ->delimiter(',');
}

void add_relaxation_options(CLI::App* cmd, ExperimentSpec& spec, std::string& variant,
                            std::string& schur) {
    cmd->add_option("--variant", variant, "Relaxation variant: stiffness | diag")
        ->check(CLI::IsMember({"stiffness", "diag"}));
    cmd->add_option("--schur", schur, "Schur solve: exact (direct) | inner (V-cycles)")
        ->check(CLI::IsMember({"exact", "inner"}));
    cmd->add_option("--alpha", spec.alpha_b, "Relaxation parameter alpha_B");
    cmd->add_option("--omega", spec.omega_b, "Relaxation damping omega_B");
    cmd->add_option("--omega-j", spec.omega_j, "Inner weighted-Jacobi damping");
    cmd->add_option("--inner-cycles", spec.inner_cycles, "Inner V-cycle count");
    cmd->add_option("--inner-nu", spec.inner_nu, "Inner V-cycle pre/post smoothing steps");
}

void apply_table_preset(ExperimentSpec& spec) {
    if (spec.table == 0) return;
    if (spec.table < 3 || spec.table > 6)
        throw std::invalid_argument("--table preset must be 3..6 for solver commands");
    spec.gamma = 2;
    spec.variant = BsrVariant::stiffness;
    if (spec.table == 3) {
        spec.inner_mg = false;
        spec.alpha_b = 1.0;
        spec.omega_b = 0.75;
    } else {
        spec.inner_mg = true;
        spec.alpha_b = 1.5;
        spec.omega_b = 1.125;
        spec.omega_j = 0.8;
        spec.inner_cycles = 3;
        spec.inner_nu = 2;
    }
    if (spec.table >= 5) spec.tol = 1e-10;
}

int run_export(const std::string& what, index_t n, double beta, const std::string& variant,
               const std::string& out) {
    const UniformGrid grid(n);
    SparseMatrix A;
    if (what == "M") {
        A = assemble_mass_2d(grid);
    } else if (what == "K") {
        A = assemble_stiffness_2d(grid);
    } else if (what == "Afd") {
        A = assemble_fd_laplacian(grid);
    } else if (what == "L") {
        A = assemble_saddle(grid, beta).L;
    } else if (what == "S") {
        A = schur_matrix(assemble_saddle(grid, beta),
                         variant == "diag" ? BsrVariant::diag_mass : BsrVariant::stiffness);
    } else if (what == "P") {
        A = prolongation(UniformGrid(n / 2), grid);
    } else {
        throw std::invalid_argument("export: unknown operator " + what);
    }
    write_text(out, to_matrix_market(A));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Multigrid solver with stiffness-based Braess-Sarazin relaxation for the\n"
        "three-field distributed-control saddle system, plus its local Fourier\n"
        "analysis. Benchmark tables are reproduced with 'reproduce table<N>'."};
    app.require_subcommand(1);

    ExperimentSpec spec;
    std::string variant = "stiffness";
    std::string schur = "exact";
    std::string cycle = "W";
    std::string table_arg;
    std::string export_what = "L";
    std::string export_out = "-";

    CLI::App* smooth = app.add_subcommand("lfa-smooth", "Smoothing factor / optimal damping");
    add_grid_options(smooth, spec);
    smooth->add_option("--omega", spec.omega_lfa,
                       "Evaluate at this damping (omit to search the optimum)");
    smooth->add_option("--variant", variant, "stiffness | diag")
        ->check(CLI::IsMember({"stiffness", "diag"}));
    smooth->add_option("--density", spec.density, "High-frequency lattice per axis (>= 32)");
    add_output_options(smooth, spec);

    CLI::App* twog = app.add_subcommand("lfa-two-grid", "LFA two-grid convergence factor");
    add_grid_options(twog, spec);
    twog->add_option("--nu", spec.nus, "Total smoothing steps (list)")->delimiter(',');
    twog->add_option("--variant", variant, "stiffness | diag")
        ->check(CLI::IsMember({"stiffness", "diag"}));
    twog->add_option("--omega", spec.omega_b, "Relaxation damping omega_B");
    twog->add_option("--alpha", spec.alpha_b, "Relaxation parameter alpha_B");
    twog->add_option("--samples", spec.n_samples, "Sampling lattice per axis");
    add_output_options(twog, spec);

    CLI::App* measure =
        app.add_subcommand("mg-measure", "Measured convergence factor (homogeneous problem)");
    add_grid_options(measure, spec);
    measure->add_option("--nu", spec.nus, "Total smoothing steps (list)")->delimiter(',');
    measure->add_option("--cycle", cycle, "V | W")->check(CLI::IsMember({"V", "W"}));
    add_relaxation_options(measure, spec, variant, schur);
    measure->add_option("--cycles", spec.n_cycles, "Number of measurement cycles");
    measure->add_option("--seed", spec.seed, "Random initial-guess seed");
    measure->add_option("--table", spec.table, "Apply the parameter preset of table 3 or 4");
    add_output_options(measure, spec);

    CLI::App* solve =
        app.add_subcommand("mg-solve", "Iteration counts for the benchmark control problem");
    add_grid_options(solve, spec);
    solve->add_option("--nu", spec.nus, "Total smoothing steps (list)")->delimiter(',');
    solve->add_option("--cycle", cycle, "V | W")->check(CLI::IsMember({"V", "W"}));
    add_relaxation_options(solve, spec, variant, schur);
    solve->add_option("--tol", spec.tol, "Relative residual tolerance");
    solve->add_option("--max-iters", spec.max_iters, "Iteration cap");
    solve->add_option("--seed", spec.seed, "Seed recorded in output rows");
    solve->add_option("--table", spec.table, "Apply the parameter preset of table 5 or 6");
    add_output_options(solve, spec);

    CLI::App* rep = app.add_subcommand(
        "reproduce", "Run a benchmark table's grid and diff against its reference values");
    rep->add_option("table", table_arg, "table1 .. table6 (or just the number)")->required();
    rep->add_flag("--include-512", spec.include_512, "Include the n=512 rows of tables 5-6");
    rep->add_option("--seed", spec.seed, "Random initial-guess seed");
    add_output_options(rep, spec);

    CLI::App* exp = app.add_subcommand("export", "Write an operator in MatrixMarket format");
    exp->add_option("--what", export_what, "M | K | Afd | L | S | P")
        ->check(CLI::IsMember({"M", "K", "Afd", "L", "S", "P"}));
    exp->add_option("-n,--n", spec.ns, "Cells per side")->delimiter(',');
    exp->add_option("--beta", spec.betas, "Regularization parameter")->delimiter(',');
    exp->add_option("--variant", variant, "Variant for S")
        ->check(CLI::IsMember({"stiffness", "diag"}));
    exp->add_option("-o,--out", export_out, "Output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    spec.variant = variant == "diag" ? BsrVariant::diag_mass : BsrVariant::stiffness;
    spec.inner_mg = schur == "inner";
    spec.gamma = cycle == "V" ? 1 : 2;

    try {
        if (exp->parsed())
            return run_export(export_what, spec.ns.at(0), spec.betas.at(0), variant,
                              export_out);

        for (CLI::App* sub : {smooth, twog, measure, solve, rep})
            if (sub->parsed()) spec.command = sub->get_name();
        if (spec.command == "reproduce") {
            std::string digits = table_arg;
            if (digits.rfind("table", 0) == 0) digits = digits.substr(5);
            spec.table = std::atoi(digits.c_str());
            if (spec.table < 1 || spec.table > 6)
                throw std::invalid_argument("reproduce: expected table1 .. table6");
        } else {
            apply_table_preset(spec);
        }

        const RunOutcome outcome = run(spec);
        if (!outcome.notes.empty()) std::cerr << outcome.notes;
        write_text(spec.output,
                   spec.format == "json" ? to_json(outcome.rows) : to_csv(outcome.rows));
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
