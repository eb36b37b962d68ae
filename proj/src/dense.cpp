#include "ocmg/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace ocmg {

DenseLU::DenseLU(const SparseMatrix& A) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("DenseLU: not square");
    n_ = A.n_rows;
    lu_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    perm_.resize(n_);
    for (index_t i = 0; i < n_; ++i) {
        perm_[i] = i;
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
            lu_[static_cast<std::size_t>(i) * n_ + A.col_indices[k]] = A.values[k];
    }
    double scale = A.max_abs();
    if (scale == 0.0) throw std::runtime_error("DenseLU: zero matrix");
    for (index_t col = 0; col < n_; ++col) {
        index_t piv = col;
        double best = std::abs(lu_[static_cast<std::size_t>(col) * n_ + col]);
        for (index_t i = col + 1; i < n_; ++i) {
            const double v = std::abs(lu_[static_cast<std::size_t>(i) * n_ + col]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= 1e-14 * scale) throw std::runtime_error("DenseLU: singular matrix");
        if (piv != col) {
            for (index_t j = 0; j < n_; ++j)
                std::swap(lu_[static_cast<std::size_t>(piv) * n_ + j],
                          lu_[static_cast<std::size_t>(col) * n_ + j]);
            std::swap(perm_[piv], perm_[col]);
        }
        const double d = lu_[static_cast<std::size_t>(col) * n_ + col];
        for (index_t i = col + 1; i < n_; ++i) {
            double& lik = lu_[static_cast<std::size_t>(i) * n_ + col];
            lik /= d;
            const double f = lik;
            if (f == 0.0) continue;
            const double* urow = &lu_[static_cast<std::size_t>(col) * n_];
            double* irow = &lu_[static_cast<std::size_t>(i) * n_];
            for (index_t j = col + 1; j < n_; ++j) irow[j] -= f * urow[j];
        }
    }
}

Vector DenseLU::solve(const Vector& b) const {
    if (static_cast<index_t>(b.size()) != n_) throw std::invalid_argument("DenseLU::solve: size mismatch");
    Vector x(n_);
    for (index_t i = 0; i < n_; ++i) x[i] = b[perm_[i]];
    for (index_t i = 1; i < n_; ++i) {
        double s = x[i];
        const double* row = &lu_[static_cast<std::size_t>(i) * n_];
        for (index_t j = 0; j < i; ++j) s -= row[j] * x[j];
        x[i] = s;
    }
    for (index_t i = n_ - 1; i >= 0; --i) {
        double s = x[i];
        const double* row = &lu_[static_cast<std::size_t>(i) * n_];
        for (index_t j = i + 1; j < n_; ++j) s -= row[j] * x[j];
        x[i] = s / row[i];
    }
    return x;
}

Vector direct_solve(const SparseMatrix& A, const Vector& b) {
    DenseLU lu(A);
    Vector x = lu.solve(b);
    Vector r = spmv(A, x);
    axpy(-1.0, b, r);
    const double bnorm = norm2(b);
    if (bnorm > 0.0 && norm2(r) > 1e-12 * bnorm) {
        // one step of iterative refinement before giving up
        Vector dx = lu.solve(r);
        axpy(-1.0, dx, x);
        r = spmv(A, x);
        axpy(-1.0, b, r);
        if (norm2(r) > 1e-12 * bnorm) throw std::runtime_error("direct_solve: residual too large");
    }
    return x;
}

BandCholesky::BandCholesky(const SparseMatrix& A) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("BandCholesky: not square");
    n_ = A.n_rows;
    bw_ = 0;
    for (index_t i = 0; i < n_; ++i)
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
            bw_ = std::max(bw_, std::abs(i - A.col_indices[k]));
    const std::size_t ld = static_cast<std::size_t>(bw_) + 1;
    band_.assign(static_cast<std::size_t>(n_) * ld, 0.0);
    for (index_t i = 0; i < n_; ++i)
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            const index_t j = A.col_indices[k];
            if (j <= i) band_[static_cast<std::size_t>(j) * ld + (i - j)] = A.values[k];
        }

    for (index_t j = 0; j < n_; ++j) {
        double* colj = &band_[static_cast<std::size_t>(j) * ld];
        // subtract contributions from prior columns that reach row j
        const index_t k0 = std::max<index_t>(0, j - bw_);
        for (index_t k = k0; k < j; ++k) {
            const double* colk = &band_[static_cast<std::size_t>(k) * ld];
            const double ljk = colk[j - k];
            if (ljk == 0.0) continue;
            const index_t imax = std::min<index_t>(n_ - 1, k + bw_);
            for (index_t i = j; i <= imax; ++i) colj[i - j] -= colk[i - k] * ljk;
        }
        if (colj[0] <= 0.0) throw std::runtime_error("BandCholesky: matrix not positive definite");
        const double d = std::sqrt(colj[0]);
        colj[0] = d;
        const index_t imax = std::min<index_t>(n_ - 1, j + bw_);
        for (index_t i = j + 1; i <= imax; ++i) colj[i - j] /= d;
    }
}

void BandCholesky::solve(const double* b, double* x) const {
    const std::size_t ld = static_cast<std::size_t>(bw_) + 1;
    for (index_t i = 0; i < n_; ++i) x[i] = b[i];
    // forward: L y = b
    for (index_t j = 0; j < n_; ++j) {
        const double* colj = &band_[static_cast<std::size_t>(j) * ld];
        x[j] /= colj[0];
        const double xj = x[j];
        const index_t imax = std::min<index_t>(n_ - 1, j + bw_);
        for (index_t i = j + 1; i <= imax; ++i) x[i] -= colj[i - j] * xj;
    }
    // backward: L^T x = y
    for (index_t j = n_ - 1; j >= 0; --j) {
        const double* colj = &band_[static_cast<std::size_t>(j) * ld];
        double s = x[j];
        const index_t imax = std::min<index_t>(n_ - 1, j + bw_);
        for (index_t i = j + 1; i <= imax; ++i) s -= colj[i - j] * x[i];
        x[j] = s / colj[0];
    }
}

Vector BandCholesky::solve(const Vector& b) const {
    if (static_cast<index_t>(b.size()) != n_)
        throw std::invalid_argument("BandCholesky::solve: size mismatch");
    Vector x(n_);
    solve(b.data(), x.data());
    return x;
}

}  // namespace ocmg
