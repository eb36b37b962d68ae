/// @file eig.hpp
/// @brief Small dense complex matrices and a general eigenvalue solver for
/// the Fourier symbols (3x3 relaxation symbols, 12x12 two-grid symbols).

#ifndef OCMG_EIG_HPP
#define OCMG_EIG_HPP

#include <complex>
#include <vector>

namespace ocmg {

using cplx = std::complex<double>;

/// Row-major square complex matrix.
struct ComplexMatrix {
    int n = 0;
    std::vector<cplx> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int size) : n(size), entries(static_cast<std::size_t>(size) * size) {}

    cplx& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    const cplx& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }

    static ComplexMatrix identity(int size);
    double frobenius_norm() const;
};

ComplexMatrix operator*(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexMatrix operator-(const ComplexMatrix& A, const ComplexMatrix& B);

/// X = A^{-1} B via complex LU with partial pivoting. Throws on singular A.
ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B);

cplx determinant(ComplexMatrix A);

/// All eigenvalues of a general complex matrix (sizes used here are <= 16),
/// computed by Householder Hessenberg reduction followed by shifted QR
/// iteration. Order is unspecified. Throws if the iteration stalls.
std::vector<cplx> eigenvalues(const ComplexMatrix& M);

/// max |lambda_i|.
double spectral_radius(const ComplexMatrix& M);

}  // namespace ocmg

#endif  // OCMG_EIG_HPP
