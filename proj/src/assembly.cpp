#include "ocmg/assembly.hpp"

#include <stdexcept>

namespace ocmg {

namespace {

bool is_power_of_two(index_t n) { return n > 0 && (n & (n - 1)) == 0; }

SparseMatrix tridiagonal(index_t m, double lo, double di, double up) {
    std::vector<index_t> ti, tj;
    std::vector<double> tv;
    ti.reserve(3 * m);
    tj.reserve(3 * m);
    tv.reserve(3 * m);
    for (index_t i = 0; i < m; ++i) {
        if (i > 0) {
            ti.push_back(i);
            tj.push_back(i - 1);
            tv.push_back(lo);
        }
        ti.push_back(i);
        tj.push_back(i);
        tv.push_back(di);
        if (i + 1 < m) {
            ti.push_back(i);
            tj.push_back(i + 1);
            tv.push_back(up);
        }
    }
    return SparseMatrix::from_triplets(m, m, std::move(ti), std::move(tj), std::move(tv));
}

}  // namespace

UniformGrid::UniformGrid(index_t n) : n_cells(n) {
    if (!is_power_of_two(n) || n < 4)
        throw std::invalid_argument("UniformGrid: n_cells must be a power of two >= 4");
}

Stencil1D stencil_stiffness_1d(double h) {
    if (h <= 0.0) throw std::invalid_argument("stencil_stiffness_1d: h must be positive");
    return {{-1.0 / h, 2.0 / h, -1.0 / h}};
}

Stencil1D stencil_mass_1d(double h) {
    if (h <= 0.0) throw std::invalid_argument("stencil_mass_1d: h must be positive");
    return {{h / 6.0, 4.0 * h / 6.0, h / 6.0}};
}

Stencil3x3 stencil_stiffness_2d() {
    Stencil3x3 s;
    for (int dy = 0; dy < 3; ++dy)
        for (int dx = 0; dx < 3; ++dx) s.w[dy][dx] = -1.0 / 3.0;
    s.w[1][1] = 8.0 / 3.0;
    return s;
}

Stencil3x3 stencil_mass_2d(double h) {
    const double c = h * h / 36.0;
    Stencil3x3 s = {{{c, 4 * c, c}, {4 * c, 16 * c, 4 * c}, {c, 4 * c, c}}};
    return s;
}

SparseMatrix assemble_stiffness_1d(index_t n_cells) {
    const double h = 1.0 / n_cells;
    const Stencil1D s = stencil_stiffness_1d(h);
    return tridiagonal(n_cells - 1, s.w[0], s.w[1], s.w[2]);
}

SparseMatrix assemble_mass_1d(index_t n_cells) {
    const double h = 1.0 / n_cells;
    const Stencil1D s = stencil_mass_1d(h);
    return tridiagonal(n_cells - 1, s.w[0], s.w[1], s.w[2]);
}

SparseMatrix assemble_stiffness_2d(const UniformGrid& grid) {
    const SparseMatrix K1 = assemble_stiffness_1d(grid.n_cells);
    const SparseMatrix M1 = assemble_mass_1d(grid.n_cells);
    return add_scaled(kron(K1, M1), kron(M1, K1), 1.0, 1.0);
}

SparseMatrix assemble_mass_2d(const UniformGrid& grid) {
    const SparseMatrix M1 = assemble_mass_1d(grid.n_cells);
    return kron(M1, M1);
}

SparseMatrix assemble_fd_laplacian(const UniformGrid& grid) {
    const index_t m = grid.nodes_per_side();
    const double ih2 = 1.0 / (grid.h() * grid.h());
    std::vector<index_t> ti, tj;
    std::vector<double> tv;
    for (index_t iy = 1; iy <= m; ++iy) {
        for (index_t ix = 1; ix <= m; ++ix) {
            const index_t r = grid.index(ix, iy);
            const index_t off[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
            ti.push_back(r);
            tj.push_back(r);
            tv.push_back(4.0 * ih2);
            for (auto& d : off) {
                const index_t jx = ix + d[0], jy = iy + d[1];
                if (grid.is_boundary(jx, jy)) continue;
                ti.push_back(r);
                tj.push_back(grid.index(jx, jy));
                tv.push_back(-ih2);
            }
        }
    }
    return SparseMatrix::from_triplets(grid.n_interior(), grid.n_interior(), std::move(ti),
                                       std::move(tj), std::move(tv));
}

SparseMatrix compose_saddle_operator(const SparseMatrix& M, const SparseMatrix& K, double beta) {
    const index_t m = M.n_rows;
    std::vector<index_t> ti, tj;
    std::vector<double> tv;
    const std::size_t cap = 2 * static_cast<std::size_t>(M.nnz()) * 2 + 2 * K.nnz();
    ti.reserve(cap);
    tj.reserve(cap);
    tv.reserve(cap);
    auto put_block = [&](index_t bi, index_t bj, const SparseMatrix& A, double c) {
        for (index_t i = 0; i < A.n_rows; ++i)
            for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
                ti.push_back(bi * m + i);
                tj.push_back(bj * m + A.col_indices[k]);
                tv.push_back(c * A.values[k]);
            }
    };
    put_block(0, 0, M, 2.0 * beta);
    put_block(0, 2, M, -1.0);
    put_block(1, 1, M, 1.0);
    put_block(1, 2, K, 1.0);
    put_block(2, 0, M, -1.0);
    put_block(2, 1, K, 1.0);
    return SparseMatrix::from_triplets(3 * m, 3 * m, std::move(ti), std::move(tj), std::move(tv));
}

SaddleSystem assemble_saddle(const UniformGrid& grid, double beta) {
    if (beta <= 0.0) throw std::invalid_argument("assemble_saddle: beta must be positive");
    SaddleSystem sys;
    sys.M = assemble_mass_2d(grid);
    sys.K = assemble_stiffness_2d(grid);
    sys.A_fd = assemble_fd_laplacian(grid);
    sys.beta = beta;
    sys.L = compose_saddle_operator(sys.M, sys.K, beta);
    return sys;
}

namespace {

/// Applies a constant 3x3 stencil at every interior node of the full grid
/// (boundary values of `field` participate; no elimination here).
Vector apply_stencil_full(const UniformGrid& grid, const Stencil3x3& s,
                          const std::vector<double>& field) {
    const index_t np = grid.n_cells + 1;  // nodes per side, closed grid
    Vector out(grid.n_interior(), 0.0);
    for (index_t iy = 1; iy < grid.n_cells; ++iy)
        for (index_t ix = 1; ix < grid.n_cells; ++ix) {
            double sum = 0.0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    sum += s.w[dy + 1][dx + 1] * field[(iy + dy) * np + (ix + dx)];
            out[grid.index(ix, iy)] = sum;
        }
    return out;
}

}  // namespace

ProblemData assemble_rhs(const UniformGrid& grid, double beta, ScalarField u_hat, ScalarField g) {
    (void)beta;  // b_f = 0 regardless of beta
    const index_t np = grid.n_cells + 1;
    const index_t m = grid.n_interior();

    // nodal fields on the closed grid
    std::vector<double> lifted(np * np, 0.0);  // u_hat interior, u_hat - g on boundary
    std::vector<double> g_ext(np * np, 0.0);   // g on boundary, 0 interior
    for (index_t iy = 0; iy < np; ++iy)
        for (index_t ix = 0; ix < np; ++ix) {
            const double xv = grid.x(ix), yv = grid.x(iy);
            const double uh = u_hat ? u_hat(xv, yv) : 0.0;
            if (grid.is_boundary(ix, iy)) {
                const double gv = g ? g(xv, yv) : 0.0;
                lifted[iy * np + ix] = uh - gv;
                g_ext[iy * np + ix] = gv;
            } else {
                lifted[iy * np + ix] = uh;
            }
        }

    const Vector b_u = apply_stencil_full(grid, stencil_mass_2d(grid.h()), lifted);
    const Vector k_g = apply_stencil_full(grid, stencil_stiffness_2d(), g_ext);

    ProblemData data;
    data.u_hat = std::move(u_hat);
    data.g = std::move(g);
    data.rhs.assign(3 * m, 0.0);
    for (index_t i = 0; i < m; ++i) {
        data.rhs[m + i] = b_u[i];
        data.rhs[2 * m + i] = -k_g[i];
    }
    return data;
}

}  // namespace ocmg
