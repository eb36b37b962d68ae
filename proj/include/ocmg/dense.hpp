/// @file dense.hpp
/// @brief Direct solvers: dense LU with partial pivoting for small (possibly
/// indefinite) systems, and a banded Cholesky factorization for SPD matrices
/// whose lexicographic bandwidth is modest (the Schur complements here).

#ifndef OCMG_DENSE_HPP
#define OCMG_DENSE_HPP

#include "ocmg/sparse.hpp"

namespace ocmg {

/// LU factorization with partial pivoting, kept for repeated solves.
class DenseLU {
public:
    DenseLU() = default;
    explicit DenseLU(const SparseMatrix& A);

    Vector solve(const Vector& b) const;
    index_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

private:
    index_t n_ = 0;
    std::vector<double> lu_;      // row-major n x n
    std::vector<index_t> perm_;   // row permutation
};

/// One-shot direct solve; residual is verified (<= 1e-12 relative) and a
/// singular matrix raises.
Vector direct_solve(const SparseMatrix& A, const Vector& b);

/// Cholesky factorization of an SPD matrix stored by diagonals within its
/// lower bandwidth. Factor cost is O(n b^2), each solve O(n b).
class BandCholesky {
public:
    BandCholesky() = default;
    explicit BandCholesky(const SparseMatrix& A);

    Vector solve(const Vector& b) const;
    void solve(const double* b, double* x) const;
    index_t size() const { return n_; }
    index_t bandwidth() const { return bw_; }
    bool empty() const { return n_ == 0; }

private:
    index_t n_ = 0;
    index_t bw_ = 0;
    std::vector<double> band_;  // band_[j*(bw+1) + (i-j)] = L(i,j)
};

}  // namespace ocmg

#endif  // OCMG_DENSE_HPP
