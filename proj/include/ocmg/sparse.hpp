/// @file sparse.hpp
/// @brief Owned CSR sparse matrix storage and the kernel operations built on it.

#ifndef OCMG_SPARSE_HPP
#define OCMG_SPARSE_HPP

#include <cstdint>
#include <vector>

namespace ocmg {

using index_t = std::int32_t;
using Vector = std::vector<double>;

/// Sparse matrix in CSR format with owned storage. Column indices are
/// strictly increasing within each row; immutable after construction by
/// convention (none of the free functions mutate their inputs).
struct SparseMatrix {
    index_t n_rows = 0;
    index_t n_cols = 0;
    std::vector<index_t> row_offsets;  // length n_rows+1
    std::vector<index_t> col_indices;
    std::vector<double> values;

    SparseMatrix() : row_offsets(1, 0) {}
    SparseMatrix(index_t rows, index_t cols)
        : n_rows(rows), n_cols(cols), row_offsets(static_cast<std::size_t>(rows) + 1, 0) {}

    index_t nnz() const { return static_cast<index_t>(values.size()); }

    static SparseMatrix identity(index_t n);
    static SparseMatrix diagonal(const Vector& d);

    /// Builds from (row, col, value) triplets; duplicate entries are summed.
    static SparseMatrix from_triplets(index_t rows, index_t cols,
                                      std::vector<index_t> ti, std::vector<index_t> tj,
                                      std::vector<double> tv);

    /// Validates the CSR invariants (offsets, ordering, column range).
    bool check_invariants() const;

    Vector diag() const;
    SparseMatrix transposed() const;

    /// Largest |A_ij - A_ji|; 0 for a symmetric matrix.
    double max_asymmetry() const;

    double max_abs() const;
};

/// y = A x.
Vector spmv(const SparseMatrix& A, const Vector& x);

/// y = A x written into a caller-supplied buffer (no allocation).
void spmv(const SparseMatrix& A, const double* x, double* y);

/// c1*A + c2*B with merged sparsity. Explicit zeros are kept.
SparseMatrix add_scaled(const SparseMatrix& A, const SparseMatrix& B, double c1, double c2);

/// Sparse product A*B, rows sorted.
SparseMatrix spgemm(const SparseMatrix& A, const SparseMatrix& B);

/// Kronecker product A (x) B.
SparseMatrix kron(const SparseMatrix& A, const SparseMatrix& B);

// Dense vector helpers.
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
void axpy(double alpha, const Vector& x, Vector& y);  // y += alpha*x
void scale(Vector& x, double alpha);

struct CgResult {
    Vector x;
    index_t iterations = 0;
};

/// Conjugate gradients for SPD A: stops when ||b - A x||_2 <= tol*||b||_2.
/// The returned residual is re-verified against the matrix; failure to
/// converge within max_it throws. Pass the matrix diagonal to precondition
/// with Jacobi scaling.
CgResult cg_solve(const SparseMatrix& A, const Vector& b, double tol, index_t max_it,
                  const Vector* jacobi_diag = nullptr);

}  // namespace ocmg

#endif  // OCMG_SPARSE_HPP
