#include "ocmg/hierarchy.hpp"

#include <stdexcept>

namespace ocmg {

MgHierarchy build_hierarchy(index_t n_fine, double beta, int max_levels) {
    if (n_fine < 8 || (n_fine & (n_fine - 1)) != 0)
        throw std::invalid_argument("build_hierarchy: n_fine must be a power of two >= 8");
    if (beta <= 0.0) throw std::invalid_argument("build_hierarchy: beta must be positive");

    MgHierarchy hier;
    hier.beta = beta;

    hier.levels.push_back({UniformGrid(n_fine), assemble_saddle(UniformGrid(n_fine), beta),
                           {}, {}, {}, {}});

    index_t n = n_fine;
    while (n > 4 && (max_levels <= 0 || hier.n_levels() < max_levels)) {
        const index_t nc = n / 2;
        const UniformGrid fine_grid(n), coarse_grid(nc);
        Level& fine = hier.levels.back();

        fine.P = prolongation(coarse_grid, fine_grid);
        fine.R = restriction(fine.P);
        fine.P3 = block_diag3(fine.P);
        fine.R3 = fine.P3.transposed();

        Level coarse;
        coarse.grid = coarse_grid;
        coarse.sys.beta = beta;
        coarse.sys.M = galerkin_coarsen(fine.sys.M, fine.P, fine.R);
        coarse.sys.K = galerkin_coarsen(fine.sys.K, fine.P, fine.R);
        coarse.sys.A_fd = assemble_fd_laplacian(coarse_grid);
        coarse.sys.L = compose_saddle_operator(coarse.sys.M, coarse.sys.K, beta);
        hier.levels.push_back(std::move(coarse));
        n = nc;
    }

    hier.coarse_lu = DenseLU(hier.levels.back().sys.L);
    return hier;
}

}  // namespace ocmg
