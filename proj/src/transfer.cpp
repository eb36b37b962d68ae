#include "ocmg/transfer.hpp"

#include <stdexcept>

namespace ocmg {

SparseMatrix prolongation(const UniformGrid& coarse, const UniformGrid& fine) {
    if (fine.n_cells != 2 * coarse.n_cells)
        throw std::invalid_argument("prolongation: grids are not nested 2:1");
    const index_t nc = coarse.n_cells;
    const index_t nf = fine.n_cells;

    std::vector<index_t> ti, tj;
    std::vector<double> tv;
    const std::size_t cap = static_cast<std::size_t>(fine.n_interior()) * 4;
    ti.reserve(cap);
    tj.reserve(cap);
    tv.reserve(cap);

    for (index_t iy = 1; iy < nf; ++iy) {
        for (index_t ix = 1; ix < nf; ++ix) {
            const index_t row = fine.index(ix, iy);
            // Coarse taps along each axis: even fine index sits on a coarse
            // node, odd fine index straddles two.
            index_t cx[2], cy[2];
            double wx[2], wy[2];
            int nx, ny;
            if (ix % 2 == 0) {
                nx = 1; cx[0] = ix / 2; wx[0] = 1.0;
            } else {
                nx = 2; cx[0] = (ix - 1) / 2; cx[1] = (ix + 1) / 2;
                wx[0] = wx[1] = 0.5;
            }
            if (iy % 2 == 0) {
                ny = 1; cy[0] = iy / 2; wy[0] = 1.0;
            } else {
                ny = 2; cy[0] = (iy - 1) / 2; cy[1] = (iy + 1) / 2;
                wy[0] = wy[1] = 0.5;
            }
            for (int a = 0; a < ny; ++a) {
                for (int b = 0; b < nx; ++b) {
                    if (cx[b] == 0 || cx[b] == nc || cy[a] == 0 || cy[a] == nc)
                        continue;  // boundary tap: coarse value is zero
                    ti.push_back(row);
                    tj.push_back(coarse.index(cx[b], cy[a]));
                    tv.push_back(wx[b] * wy[a]);
                }
            }
        }
    }
    return SparseMatrix::from_triplets(fine.n_interior(), coarse.n_interior(),
                                       std::move(ti), std::move(tj), std::move(tv));
}

SparseMatrix restriction(const SparseMatrix& P) { return P.transposed(); }

SparseMatrix block_diag3(const SparseMatrix& P) {
    std::vector<index_t> ti, tj;
    std::vector<double> tv;
    ti.reserve(P.values.size() * 3);
    tj.reserve(P.values.size() * 3);
    tv.reserve(P.values.size() * 3);
    for (int blk = 0; blk < 3; ++blk) {
        const index_t roff = blk * P.n_rows;
        const index_t coff = blk * P.n_cols;
        for (index_t i = 0; i < P.n_rows; ++i) {
            for (index_t k = P.row_offsets[i]; k < P.row_offsets[i + 1]; ++k) {
                ti.push_back(roff + i);
                tj.push_back(coff + P.col_indices[k]);
                tv.push_back(P.values[k]);
            }
        }
    }
    return SparseMatrix::from_triplets(3 * P.n_rows, 3 * P.n_cols,
                                       std::move(ti), std::move(tj), std::move(tv));
}

SparseMatrix galerkin_coarsen(const SparseMatrix& L_h, const SparseMatrix& P,
                              const SparseMatrix& R) {
    return spgemm(R, spgemm(L_h, P));
}

}  // namespace ocmg
