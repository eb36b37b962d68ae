#include "ocmg/bsr.hpp"

#include <cmath>
#include <stdexcept>

namespace ocmg {

namespace {

Vector reciprocal(const Vector& d) {
    Vector r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0.0) throw std::runtime_error("schur_matrix: zero diagonal in M");
        r[i] = 1.0 / d[i];
    }
    return r;
}

}  // namespace

SparseMatrix schur_matrix(const SaddleSystem& sys, BsrVariant variant) {
    const SparseMatrix* W;
    SparseMatrix inv_diag;
    if (variant == BsrVariant::stiffness) {
        W = &sys.A_fd;
    } else {
        inv_diag = SparseMatrix::diagonal(reciprocal(sys.M.diag()));
        W = &inv_diag;
    }
    SparseMatrix MWM = spgemm(sys.M, spgemm(*W, sys.M));
    SparseMatrix KWK = spgemm(sys.K, spgemm(*W, sys.K));
    return add_scaled(MWM, KWK, 1.0 / (2.0 * sys.beta), 1.0);
}

BsrSmoother::BsrSmoother(const MgHierarchy& hier, BsrConfig cfg)
    : hier_(&hier), cfg_(cfg) {
    if (cfg_.alpha_b <= 0.0 || cfg_.omega_b <= 0.0)
        throw std::invalid_argument("BsrSmoother: alpha_b and omega_b must be positive");

    const int n_smoothing_levels = hier.n_levels() - 1;
    levels_.resize(n_smoothing_levels);
    for (int lvl = 0; lvl < n_smoothing_levels; ++lvl) {
        LevelState& st = levels_[lvl];
        st.S = schur_matrix(hier.levels[lvl].sys, cfg_.variant);
        if (cfg_.variant == BsrVariant::diag_mass)
            st.inv_diag_M = reciprocal(hier.levels[lvl].sys.M.diag());

        if (std::holds_alternative<ExactSchur>(cfg_.schur_mode)) {
            st.chol = BandCholesky(st.S);
        } else {
            // Galerkin chain of the Schur matrix down to the hierarchy's
            // coarsest grid, using the scalar transfers.
            st.inner_S.push_back(st.S);
            for (int j = lvl; j + 1 < hier.n_levels(); ++j) {
                const Level& outer = hier.levels[j];
                st.inner_S.push_back(
                    galerkin_coarsen(st.inner_S.back(), outer.P, outer.R));
            }
            st.inner_inv_diag.reserve(st.inner_S.size());
            for (const SparseMatrix& S : st.inner_S)
                st.inner_inv_diag.push_back(reciprocal(S.diag()));
            st.inner_lu = DenseLU(st.inner_S.back());
        }
    }
}

void BsrSmoother::apply_c_inverse(int level, const double* in, double* out) const {
    const SaddleSystem& sys = hier_->levels[level].sys;
    const index_t nI = hier_->levels[level].grid.n_interior();
    const double inv_2beta = 1.0 / (2.0 * sys.beta);
    if (cfg_.variant == BsrVariant::stiffness) {
        spmv(sys.A_fd, in, out);            // f segment
        spmv(sys.A_fd, in + nI, out + nI);  // u segment
        for (index_t i = 0; i < nI; ++i) out[i] *= inv_2beta;
    } else {
        const Vector& d = levels_[level].inv_diag_M;
        for (index_t i = 0; i < nI; ++i) out[i] = inv_2beta * d[i] * in[i];
        for (index_t i = 0; i < nI; ++i) out[nI + i] = d[i] * in[nI + i];
    }
}

Vector BsrSmoother::schur_solve(int level, const Vector& rhs_y) const {
    if (std::holds_alternative<ExactSchur>(cfg_.schur_mode))
        return levels_[level].chol.solve(rhs_y);
    return inner_schur_solve(level, rhs_y);
}

void BsrSmoother::inner_vcycle(int level, int depth, Vector& delta, const Vector& rhs) const {
    const LevelState& st = levels_[level];
    const SparseMatrix& S = st.inner_S[depth];
    if (depth + 1 == static_cast<int>(st.inner_S.size())) {
        delta = st.inner_lu.solve(rhs);
        return;
    }
    const auto& mode = std::get<InnerMgSchur>(cfg_.schur_mode);
    const Vector& inv_d = st.inner_inv_diag[depth];
    const index_t n = S.n_rows;
    Vector r(n);

    auto jacobi = [&]() {
        spmv(S, delta.data(), r.data());
        for (index_t i = 0; i < n; ++i)
            delta[i] += mode.omega_jacobi * inv_d[i] * (rhs[i] - r[i]);
    };

    for (int s = 0; s < mode.nu_pre; ++s) jacobi();

    spmv(S, delta.data(), r.data());
    for (index_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
    const Level& outer = hier_->levels[level + depth];
    Vector rc = spmv(outer.R, r);
    Vector ec(rc.size(), 0.0);
    inner_vcycle(level, depth + 1, ec, rc);
    Vector corr = spmv(outer.P, ec);
    axpy(1.0, corr, delta);

    for (int s = 0; s < mode.nu_post; ++s) jacobi();
}

Vector BsrSmoother::inner_schur_solve(int level, const Vector& rhs_y) const {
    const LevelState& st = levels_[level];
    if (st.inner_S.empty())
        throw std::logic_error("inner_schur_solve: smoother built in exact mode");
    const auto& mode = std::get<InnerMgSchur>(cfg_.schur_mode);
    Vector delta(rhs_y.size(), 0.0);
    if (st.inner_S.size() == 1) {
        // No coarser level to recurse to; the direct factorization is the cycle.
        return st.inner_lu.solve(rhs_y);
    }
    for (int c = 0; c < mode.n_cycles; ++c) inner_vcycle(level, 0, delta, rhs_y);
    return delta;
}

void BsrSmoother::relax(int level, Vector& z, const Vector& rhs) const {
    if (level >= static_cast<int>(levels_.size()))
        throw std::logic_error("bsr_relax: no smoother on the coarsest level");
    const SaddleSystem& sys = hier_->levels[level].sys;
    const index_t nI = hier_->levels[level].grid.n_interior();
    const double alpha = cfg_.alpha_b;

    // r = rhs - L z, split into the (f, u) segment r_x and the tau segment r_y.
    Vector r(3 * nI);
    spmv(sys.L, z.data(), r.data());
    for (index_t i = 0; i < 3 * nI; ++i) r[i] = rhs[i] - r[i];

    // Schur right side g = B C^{-1} r_x - alpha r_y, with B = [-M, K].
    Vector t(2 * nI);
    apply_c_inverse(level, r.data(), t.data());
    Vector g(nI), tmp(nI);
    spmv(sys.M, t.data(), g.data());
    spmv(sys.K, t.data() + nI, tmp.data());
    for (index_t i = 0; i < nI; ++i) g[i] = tmp[i] - g[i] - alpha * r[2 * nI + i];

    Vector dy = schur_solve(level, g);

    // delta_x = (1/alpha) C^{-1} (r_x - B^T dy); B^T dy = (-M dy, K dy).
    Vector w(2 * nI);
    spmv(sys.M, dy.data(), w.data());
    spmv(sys.K, dy.data(), w.data() + nI);
    for (index_t i = 0; i < nI; ++i) w[i] = r[i] + w[i];
    for (index_t i = 0; i < nI; ++i) w[nI + i] = r[nI + i] - w[nI + i];
    Vector dx(2 * nI);
    apply_c_inverse(level, w.data(), dx.data());

    const double step = cfg_.omega_b / alpha;
    for (index_t i = 0; i < 2 * nI; ++i) z[i] += step * dx[i];
    for (index_t i = 0; i < nI; ++i) z[2 * nI + i] += cfg_.omega_b * dy[i];
}

}  // namespace ocmg
