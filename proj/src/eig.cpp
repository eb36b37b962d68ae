#include "ocmg/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace ocmg {

ComplexMatrix ComplexMatrix::identity(int size) {
    ComplexMatrix I(size);
    for (int i = 0; i < size; ++i) I(i, i) = 1.0;
    return I;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : entries) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix& A, const ComplexMatrix& B) {
    ComplexMatrix C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            const cplx aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < A.n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

ComplexMatrix operator-(const ComplexMatrix& A, const ComplexMatrix& B) {
    ComplexMatrix C(A.n);
    for (std::size_t k = 0; k < C.entries.size(); ++k) C.entries[k] = A.entries[k] - B.entries[k];
    return C;
}

ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int n = A.n;
    ComplexMatrix lu = A, X = B;
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    const double scale = lu.frobenius_norm();
    for (int col = 0; col < n; ++col) {
        int p = col;
        double best = std::abs(lu(col, col));
        for (int i = col + 1; i < n; ++i)
            if (std::abs(lu(i, col)) > best) {
                best = std::abs(lu(i, col));
                p = i;
            }
        if (best <= 1e-15 * scale) throw std::runtime_error("complex solve: singular matrix");
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(lu(p, j), lu(col, j));
            for (int j = 0; j < X.n; ++j) std::swap(X(p, j), X(col, j));
        }
        for (int i = col + 1; i < n; ++i) {
            const cplx f = lu(i, col) / lu(col, col);
            if (f == 0.0) continue;
            lu(i, col) = f;
            for (int j = col + 1; j < n; ++j) lu(i, j) -= f * lu(col, j);
            for (int j = 0; j < X.n; ++j) X(i, j) -= f * X(col, j);
        }
    }
    for (int col = n - 1; col >= 0; --col)
        for (int j = 0; j < X.n; ++j) {
            cplx s = X(col, j);
            for (int k = col + 1; k < n; ++k) s -= lu(col, k) * X(k, j);
            X(col, j) = s / lu(col, col);
        }
    return X;
}

cplx determinant(ComplexMatrix A) {
    const int n = A.n;
    cplx det = 1.0;
    for (int col = 0; col < n; ++col) {
        int p = col;
        double best = std::abs(A(col, col));
        for (int i = col + 1; i < n; ++i)
            if (std::abs(A(i, col)) > best) {
                best = std::abs(A(i, col));
                p = i;
            }
        if (best == 0.0) return 0.0;
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(A(p, j), A(col, j));
            det = -det;
        }
        det *= A(col, col);
        for (int i = col + 1; i < n; ++i) {
            const cplx f = A(i, col) / A(col, col);
            for (int j = col + 1; j < n; ++j) A(i, j) -= f * A(col, j);
        }
    }
    return det;
}

namespace {

// Householder reduction to upper Hessenberg form (in place).
void to_hessenberg(ComplexMatrix& H) {
    const int n = H.n;
    for (int k = 0; k < n - 2; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(H(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        const cplx x0 = H(k + 1, k);
        const cplx phase = (x0 == 0.0) ? cplx(1.0) : x0 / std::abs(x0);
        const cplx alpha = -phase * colnorm;
        // v = x - alpha e1, w = v / ||v||
        std::vector<cplx> v(n, 0.0);
        v[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i] = H(i, k);
        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
        if (vnorm == 0.0) continue;
        vnorm = std::sqrt(vnorm);
        for (int i = k + 1; i < n; ++i) v[i] /= vnorm;
        // H <- (I - 2 v v^H) H
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * H(i, j);
            s *= 2.0;
            for (int i = k + 1; i < n; ++i) H(i, j) -= s * v[i];
        }
        // H <- H (I - 2 v v^H)
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k + 1; j < n; ++j) s += H(i, j) * v[j];
            s *= 2.0;
            for (int j = k + 1; j < n; ++j) H(i, j) -= s * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) H(i, k) = 0.0;
    }
}

// Eigenvalues of the trailing 2x2 block; returns the one nearest h22.
cplx wilkinson_shift(const cplx& h11, const cplx& h12, const cplx& h21, const cplx& h22) {
    const cplx tr = h11 + h22;
    const cplx det = h11 * h22 - h12 * h21;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx l1 = 0.5 * (tr + disc);
    const cplx l2 = 0.5 * (tr - disc);
    return (std::abs(l1 - h22) < std::abs(l2 - h22)) ? l1 : l2;
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& M) {
    const int n = M.n;
    std::vector<cplx> eigs;
    eigs.reserve(n);
    if (n == 0) return eigs;
    if (n == 1) return {M(0, 0)};

    ComplexMatrix H = M;
    to_hessenberg(H);
    const double mnorm = std::max(H.frobenius_norm(), 1e-300);
    const double eps = 1e-16;

    int hi = n - 1;  // active block is rows/cols [0, hi]
    int stagnant = 0;
    int total_iters = 0;
    const int max_total = 200 * n;
    while (hi > 0) {
        if (++total_iters > max_total) throw std::runtime_error("eigenvalues: QR iteration stalled");
        // deflate trailing entries
        while (hi > 0 &&
               std::abs(H(hi, hi - 1)) <=
                   eps * (std::abs(H(hi, hi)) + std::abs(H(hi - 1, hi - 1)) + mnorm * 1e-4)) {
            H(hi, hi - 1) = 0.0;
            eigs.push_back(H(hi, hi));
            --hi;
            stagnant = 0;
        }
        if (hi <= 0) break;
        // find the start of the active unreduced block
        int lo = hi;
        while (lo > 0 &&
               std::abs(H(lo, lo - 1)) >
                   eps * (std::abs(H(lo, lo)) + std::abs(H(lo - 1, lo - 1)) + mnorm * 1e-4))
            --lo;
        if (lo == hi) continue;  // deflated in the next pass
        if (hi - lo == 1) {
            // closed-form 2x2 block
            const cplx tr = H(lo, lo) + H(hi, hi);
            const cplx det = H(lo, lo) * H(hi, hi) - H(lo, hi) * H(hi, lo);
            const cplx disc = std::sqrt(tr * tr - 4.0 * det);
            eigs.push_back(0.5 * (tr + disc));
            eigs.push_back(0.5 * (tr - disc));
            hi = lo - 1;
            stagnant = 0;
            continue;
        }

        cplx shift = wilkinson_shift(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1), H(hi, hi));
        if (++stagnant % 12 == 0) {
            // exceptional shift to break symmetry-induced cycling
            shift = H(hi, hi) + cplx(0.75 * std::abs(H(hi, hi - 1)), 0.51 * std::abs(H(hi, hi - 1)));
        }

        // explicit shifted QR step on the Hessenberg block via Givens rotations
        std::vector<double> cs(hi - lo + 1);
        std::vector<cplx> sn(hi - lo + 1);
        for (int i = lo; i <= hi; ++i) H(i, i) -= shift;
        for (int k = lo; k < hi; ++k) {
            const cplx a = H(k, k);
            const cplx b = H(k + 1, k);
            const double r = std::sqrt(std::norm(a) + std::norm(b));
            double c;
            cplx s;
            if (r == 0.0) {
                c = 1.0;
                s = 0.0;
            } else {
                c = std::abs(a) / r;
                const cplx phase = (a == 0.0) ? cplx(1.0) : a / std::abs(a);
                s = phase * std::conj(b) / r;
            }
            cs[k - lo] = c;
            sn[k - lo] = s;
            for (int j = k; j <= hi; ++j) {
                const cplx t1 = H(k, j), t2 = H(k + 1, j);
                H(k, j) = c * t1 + s * t2;
                H(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (int k = lo; k < hi; ++k) {
            const double c = cs[k - lo];
            const cplx s = sn[k - lo];
            const int imax = std::min(k + 2, hi);
            for (int i = lo; i <= imax; ++i) {
                const cplx t1 = H(i, k), t2 = H(i, k + 1);
                H(i, k) = c * t1 + std::conj(s) * t2;
                H(i, k + 1) = -s * t1 + c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) H(i, i) += shift;
    }
    if (hi == 0) eigs.push_back(H(0, 0));
    return eigs;
}

double spectral_radius(const ComplexMatrix& M) {
    double r = 0.0;
    for (const cplx& l : eigenvalues(M)) r = std::max(r, std::abs(l));
    return r;
}

}  // namespace ocmg
