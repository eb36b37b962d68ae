/// @file runner.hpp
/// @brief Experiment matrix execution: ad-hoc parameter studies and
/// self-checking reproduction of the six benchmark tables.

#ifndef OCMG_RUNNER_HPP
#define OCMG_RUNNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ocmg/bsr.hpp"
#include "ocmg/report.hpp"

namespace ocmg {

struct ExperimentSpec {
    std::string command;  // lfa-smooth | lfa-two-grid | mg-measure | mg-solve | reproduce
    std::vector<double> betas{1e-2};
    std::vector<index_t> ns{64};  // cells per side
    std::vector<int> nus{1};      // total smoothing steps; split nu1 = ceil, nu2 = floor

    // Cycle and relaxation parameters.
    int gamma = 2;  // 1 = V, 2 = W
    BsrVariant variant = BsrVariant::stiffness;
    bool inner_mg = false;  // Schur mode: false = exact (direct), true = inner V-cycles
    double alpha_b = 1.0;
    double omega_b = 0.75;
    double omega_j = 0.8;
    int inner_cycles = 3;
    int inner_nu = 2;  // pre = post smoothing of the inner V-cycle

    // LFA controls.
    double omega_lfa = -1.0;  // lfa-smooth: fixed damping; < 0 searches the optimum
    int n_samples = 32;       // two-grid lattice per axis
    int density = 32;         // smoothing-factor lattice per axis

    // Measurement controls.
    int n_cycles = 100;
    double tol = 1e-10;
    int max_iters = 200;
    std::uint64_t seed = 1;

    // reproduce controls.
    int table = 0;
    bool include_512 = false;

    // Output.
    bool timing = false;  // fill runtime_ms (breaks byte-reproducibility across runs)
    std::string output;   // path; empty or "-" = stdout
    std::string format = "csv";
};

struct RunOutcome {
    std::vector<ResultRow> rows;
    std::string notes;       // informational lines (e.g. optimal damping, diff table)
    bool diff_pass = true;   // reproduce: all entries within tolerance
    bool any_diverged = false;
};

/// nu1 = ceil(nu/2), nu2 = floor(nu/2).
std::pair<int, int> split_nu(int nu);

/// Desired state of the iteration-count benchmark:
/// (2x-1)^2 (2y-1)^2 on [0,1/2]^2, 0 elsewhere; boundary data is its trace.
double benchmark_u_hat(double x, double y);

/// Executes the experiment matrix. Parameter tuples (beta, n) may run in a
/// worker pool (OCMG_THREADS); output row order is fixed by the spec, never
/// by scheduling. Throws on invalid spec.
RunOutcome run(const ExperimentSpec& spec);

}  // namespace ocmg

#endif  // OCMG_RUNNER_HPP
