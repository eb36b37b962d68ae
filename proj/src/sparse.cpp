#include "ocmg/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ocmg {

SparseMatrix SparseMatrix::identity(index_t n) {
    SparseMatrix I(n, n);
    I.col_indices.resize(n);
    I.values.assign(n, 1.0);
    for (index_t i = 0; i < n; ++i) {
        I.row_offsets[i + 1] = i + 1;
        I.col_indices[i] = i;
    }
    return I;
}

SparseMatrix SparseMatrix::diagonal(const Vector& d) {
    SparseMatrix D = identity(static_cast<index_t>(d.size()));
    D.values.assign(d.begin(), d.end());
    return D;
}

SparseMatrix SparseMatrix::from_triplets(index_t rows, index_t cols,
                                         std::vector<index_t> ti, std::vector<index_t> tj,
                                         std::vector<double> tv) {
    if (ti.size() != tj.size() || ti.size() != tv.size())
        throw std::invalid_argument("from_triplets: length mismatch");
    const std::size_t m = ti.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ti[a] != ti[b]) return ti[a] < ti[b];
        return tj[a] < tj[b];
    });

    SparseMatrix A(rows, cols);
    A.col_indices.reserve(m);
    A.values.reserve(m);
    index_t prev_i = -1, prev_j = -1;
    for (std::size_t k = 0; k < m; ++k) {
        const index_t i = ti[order[k]];
        const index_t j = tj[order[k]];
        const double v = tv[order[k]];
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw std::invalid_argument("from_triplets: index out of range");
        if (i == prev_i && j == prev_j) {
            A.values.back() += v;
        } else {
            A.col_indices.push_back(j);
            A.values.push_back(v);
            A.row_offsets[i + 1] = static_cast<index_t>(A.col_indices.size());
            prev_i = i;
            prev_j = j;
        }
    }
    // fill offsets for empty rows
    for (index_t i = 0; i < rows; ++i)
        A.row_offsets[i + 1] = std::max(A.row_offsets[i + 1], A.row_offsets[i]);
    return A;
}

bool SparseMatrix::check_invariants() const {
    if (row_offsets.size() != static_cast<std::size_t>(n_rows) + 1) return false;
    if (row_offsets.front() != 0) return false;
    if (row_offsets.back() != nnz()) return false;
    for (index_t i = 0; i < n_rows; ++i) {
        if (row_offsets[i + 1] < row_offsets[i]) return false;
        for (index_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
            if (col_indices[k] < 0 || col_indices[k] >= n_cols) return false;
            if (k > row_offsets[i] && col_indices[k] <= col_indices[k - 1]) return false;
        }
    }
    return true;
}

Vector SparseMatrix::diag() const {
    Vector d(static_cast<std::size_t>(std::min(n_rows, n_cols)), 0.0);
    for (index_t i = 0; i < static_cast<index_t>(d.size()); ++i)
        for (index_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k)
            if (col_indices[k] == i) d[i] = values[k];
    return d;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix T(n_cols, n_rows);
    std::vector<index_t> count(n_cols, 0);
    for (index_t k = 0; k < nnz(); ++k) count[col_indices[k]]++;
    for (index_t j = 0; j < n_cols; ++j) T.row_offsets[j + 1] = T.row_offsets[j] + count[j];
    T.col_indices.resize(nnz());
    T.values.resize(nnz());
    std::vector<index_t> pos(T.row_offsets.begin(), T.row_offsets.end() - 1);
    for (index_t i = 0; i < n_rows; ++i) {
        for (index_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
            const index_t j = col_indices[k];
            T.col_indices[pos[j]] = i;
            T.values[pos[j]] = values[k];
            pos[j]++;
        }
    }
    return T;  // rows come out sorted because source rows are scanned in order
}

double SparseMatrix::max_asymmetry() const {
    if (n_rows != n_cols) throw std::invalid_argument("max_asymmetry: not square");
    const SparseMatrix T = transposed();
    const SparseMatrix D = add_scaled(*this, T, 1.0, -1.0);
    return D.max_abs();
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

Vector spmv(const SparseMatrix& A, const Vector& x) {
    if (A.n_cols != static_cast<index_t>(x.size()))
        throw std::invalid_argument("spmv: dimension mismatch");
    Vector y(A.n_rows);
    spmv(A, x.data(), y.data());
    return y;
}

void spmv(const SparseMatrix& A, const double* x, double* y) {
    for (index_t i = 0; i < A.n_rows; ++i) {
        double sum = 0.0;
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
            sum += A.values[k] * x[A.col_indices[k]];
        y[i] = sum;
    }
}

SparseMatrix add_scaled(const SparseMatrix& A, const SparseMatrix& B, double c1, double c2) {
    if (A.n_rows != B.n_rows || A.n_cols != B.n_cols)
        throw std::invalid_argument("add_scaled: shape mismatch");
    SparseMatrix C(A.n_rows, A.n_cols);
    C.col_indices.reserve(A.nnz() + B.nnz());
    C.values.reserve(A.nnz() + B.nnz());
    for (index_t i = 0; i < A.n_rows; ++i) {
        index_t ka = A.row_offsets[i], kb = B.row_offsets[i];
        const index_t ea = A.row_offsets[i + 1], eb = B.row_offsets[i + 1];
        while (ka < ea || kb < eb) {
            index_t ja = ka < ea ? A.col_indices[ka] : C.n_cols;
            index_t jb = kb < eb ? B.col_indices[kb] : C.n_cols;
            if (ja == jb) {
                C.col_indices.push_back(ja);
                C.values.push_back(c1 * A.values[ka++] + c2 * B.values[kb++]);
            } else if (ja < jb) {
                C.col_indices.push_back(ja);
                C.values.push_back(c1 * A.values[ka++]);
            } else {
                C.col_indices.push_back(jb);
                C.values.push_back(c2 * B.values[kb++]);
            }
        }
        C.row_offsets[i + 1] = static_cast<index_t>(C.col_indices.size());
    }
    return C;
}

SparseMatrix spgemm(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.n_cols != B.n_rows) throw std::invalid_argument("spgemm: dimension mismatch");
    SparseMatrix C(A.n_rows, B.n_cols);
    // Gustavson with a dense accumulator per row.
    std::vector<double> acc(B.n_cols, 0.0);
    std::vector<index_t> marker(B.n_cols, -1);
    std::vector<index_t> cols;
    for (index_t i = 0; i < A.n_rows; ++i) {
        cols.clear();
        for (index_t ka = A.row_offsets[i]; ka < A.row_offsets[i + 1]; ++ka) {
            const index_t j = A.col_indices[ka];
            const double av = A.values[ka];
            for (index_t kb = B.row_offsets[j]; kb < B.row_offsets[j + 1]; ++kb) {
                const index_t c = B.col_indices[kb];
                if (marker[c] != i) {
                    marker[c] = i;
                    acc[c] = 0.0;
                    cols.push_back(c);
                }
                acc[c] += av * B.values[kb];
            }
        }
        std::sort(cols.begin(), cols.end());
        for (index_t c : cols) {
            C.col_indices.push_back(c);
            C.values.push_back(acc[c]);
        }
        C.row_offsets[i + 1] = static_cast<index_t>(C.col_indices.size());
    }
    return C;
}

SparseMatrix kron(const SparseMatrix& A, const SparseMatrix& B) {
    SparseMatrix C(A.n_rows * B.n_rows, A.n_cols * B.n_cols);
    C.col_indices.reserve(static_cast<std::size_t>(A.nnz()) * B.nnz());
    C.values.reserve(static_cast<std::size_t>(A.nnz()) * B.nnz());
    for (index_t ia = 0; ia < A.n_rows; ++ia) {
        for (index_t ib = 0; ib < B.n_rows; ++ib) {
            const index_t row = ia * B.n_rows + ib;
            for (index_t ka = A.row_offsets[ia]; ka < A.row_offsets[ia + 1]; ++ka) {
                for (index_t kb = B.row_offsets[ib]; kb < B.row_offsets[ib + 1]; ++kb) {
                    C.col_indices.push_back(A.col_indices[ka] * B.n_cols + B.col_indices[kb]);
                    C.values.push_back(A.values[ka] * B.values[kb]);
                }
            }
            C.row_offsets[row + 1] = static_cast<index_t>(C.col_indices.size());
        }
    }
    return C;
}

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const Vector& x, Vector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vector& x, double alpha) {
    for (double& v : x) v *= alpha;
}

CgResult cg_solve(const SparseMatrix& A, const Vector& b, double tol, index_t max_it,
                  const Vector* jacobi_diag) {
    if (A.n_rows != A.n_cols || A.n_cols != static_cast<index_t>(b.size()))
        throw std::invalid_argument("cg_solve: dimension mismatch");
    const double bnorm = norm2(b);
    CgResult res;
    res.x.assign(b.size(), 0.0);
    if (bnorm == 0.0) return res;

    Vector r = b, z(b.size()), p(b.size()), Ap(b.size());
    auto precond = [&](const Vector& in, Vector& out) {
        if (jacobi_diag) {
            for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] / (*jacobi_diag)[i];
        } else {
            out = in;
        }
    };
    precond(r, z);
    p = z;
    double rz = dot(r, z);
    for (index_t it = 1; it <= max_it; ++it) {
        spmv(A, p.data(), Ap.data());
        const double pAp = dot(p, Ap);
        if (pAp <= 0.0) throw std::runtime_error("cg_solve: matrix not positive definite");
        const double alpha = rz / pAp;
        axpy(alpha, p, res.x);
        axpy(-alpha, Ap, r);
        res.iterations = it;
        if (norm2(r) <= tol * bnorm) {
            // verify with the true residual, not the recurrence
            Vector t = spmv(A, res.x);
            axpy(-1.0, b, t);
            if (norm2(t) <= tol * bnorm) return res;
        }
        precond(r, z);
        const double rz_new = dot(r, z);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = z[i] + (rz_new / rz) * p[i];
        rz = rz_new;
    }
    throw std::runtime_error("cg_solve: no convergence within max_it");
}

}  // namespace ocmg
