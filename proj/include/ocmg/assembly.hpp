/// @file assembly.hpp
/// @brief Uniform-grid Q1 finite element and five-point finite difference
/// assembly on the unit square, Dirichlet boundary nodes eliminated, plus the
/// three-field saddle operator of the distributed control problem and its
/// right-hand side.

#ifndef OCMG_ASSEMBLY_HPP
#define OCMG_ASSEMBLY_HPP

#include <functional>

#include "ocmg/sparse.hpp"

namespace ocmg {

/// Uniform n x n cell grid on [0,1]^2. Interior nodes are ordered
/// lexicographically with x fastest; this ordering is the contract for every
/// operator assembled here.
struct UniformGrid {
    index_t n_cells = 0;

    UniformGrid() = default;  // empty placeholder; not a valid grid
    explicit UniformGrid(index_t n);

    double h() const { return 1.0 / n_cells; }
    index_t nodes_per_side() const { return n_cells - 1; }
    index_t n_interior() const { return (n_cells - 1) * (n_cells - 1); }

    /// Interior node (ix, iy), 1-based grid coordinates, to DOF index.
    index_t index(index_t ix, index_t iy) const { return (iy - 1) * (n_cells - 1) + (ix - 1); }
    double x(index_t ix) const { return ix * h(); }
    bool is_boundary(index_t ix, index_t iy) const {
        return ix == 0 || iy == 0 || ix == n_cells || iy == n_cells;
    }
};

struct Stencil1D {
    double w[3];
};

struct Stencil3x3 {
    double w[3][3];  // w[dy+1][dx+1]
};

/// (1/h) [-1 2 -1]
Stencil1D stencil_stiffness_1d(double h);
/// (h/6) [1 4 1]
Stencil1D stencil_mass_1d(double h);
/// (1/3) [[-1,-1,-1],[-1,8,-1],[-1,-1,-1]]
Stencil3x3 stencil_stiffness_2d();
/// (h^2/36) [[1,4,1],[4,16,4],[1,4,1]]
Stencil3x3 stencil_mass_2d(double h);

/// 1D interior operators on n-1 nodes.
SparseMatrix assemble_stiffness_1d(index_t n_cells);
SparseMatrix assemble_mass_1d(index_t n_cells);

/// Q1 stiffness K = K1 (x) M1 + M1 (x) K1 on interior DOFs.
SparseMatrix assemble_stiffness_2d(const UniformGrid& grid);
/// Q1 mass M = M1 (x) M1.
SparseMatrix assemble_mass_2d(const UniformGrid& grid);
/// Five-point Laplacian, diagonal 4/h^2.
SparseMatrix assemble_fd_laplacian(const UniformGrid& grid);

/// The three-field operator
///   L = [[2*beta*M, 0, -M], [0, M, K], [-M, K, 0]]
/// acting on (f, u, tau) segments of length n_interior each.
struct SaddleSystem {
    SparseMatrix M;
    SparseMatrix K;
    SparseMatrix A_fd;
    double beta = 0.0;
    SparseMatrix L;
};

SaddleSystem assemble_saddle(const UniformGrid& grid, double beta);

/// Composes the block operator from already-assembled M and K (used for
/// Galerkin-coarsened levels, where M and K are coarsened separately).
SparseMatrix compose_saddle_operator(const SparseMatrix& M, const SparseMatrix& K, double beta);

using ScalarField = std::function<double(double, double)>;

/// Desired state, boundary data, and the assembled right-hand side
/// b = (b_f, b_u, b_tau).
struct ProblemData {
    ScalarField u_hat;
    ScalarField g;
    Vector rhs;
};

/// b_f = 0; b_u is the mass inner product of the nodal interpolant of u_hat
/// against interior test functions with the Dirichlet data lifted out
/// (boundary nodes carry u_hat - g, which vanishes for the experiments where
/// g = u_hat on the boundary); b_tau = -K_ib g_b is the stiffness lift of the
/// boundary data into the state equation.
ProblemData assemble_rhs(const UniformGrid& grid, double beta, ScalarField u_hat, ScalarField g);

}  // namespace ocmg

#endif  // OCMG_ASSEMBLY_HPP
