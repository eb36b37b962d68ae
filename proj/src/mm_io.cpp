#include "ocmg/mm_io.hpp"

#include <cstdio>

namespace ocmg {

std::string to_matrix_market(const SparseMatrix& A) {
    std::string out = "%%MatrixMarket matrix coordinate real general\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d %d %d\n", A.n_rows, A.n_cols, A.nnz());
    out += buf;
    for (index_t i = 0; i < A.n_rows; ++i) {
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, A.col_indices[k] + 1,
                          A.values[k]);
            out += buf;
        }
    }
    return out;
}

}  // namespace ocmg
