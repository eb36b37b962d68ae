/// @file bsr.hpp
/// @brief Braess-Sarazin relaxation for the three-field saddle system. The
/// (f, u) block of the preconditioner is alpha*C with C^{-1} chosen as either
/// multiplication by the five-point Laplacian (stiffness variant, no inversion
/// needed) or inversion of the mass-matrix diagonal (diag variant); the tau
/// update solves the Schur system B C^{-1} B^T exactly (banded Cholesky) or by
/// a fixed number of inner weighted-Jacobi V-cycles.

#ifndef OCMG_BSR_HPP
#define OCMG_BSR_HPP

#include <variant>
#include <vector>

#include "ocmg/dense.hpp"
#include "ocmg/hierarchy.hpp"

namespace ocmg {

enum class BsrVariant { stiffness, diag_mass };

/// Schur systems solved to machine precision by a cached direct
/// factorization. tol is the verification threshold for that solve.
struct ExactSchur {
    double tol = 1e-12;
};

/// Fixed count of V(nu_pre, nu_post) weighted-Jacobi cycles on the Schur
/// system, started from zero; no tolerance is enforced.
struct InnerMgSchur {
    int n_cycles = 3;
    int nu_pre = 2;
    int nu_post = 2;
    double omega_jacobi = 0.8;
};

using SchurMode = std::variant<ExactSchur, InnerMgSchur>;

struct BsrConfig {
    BsrVariant variant = BsrVariant::stiffness;
    double alpha_b = 1.0;
    double omega_b = 0.75;
    SchurMode schur_mode = ExactSchur{};
};

/// S = B C^{-1} B^T expanded per variant:
///   stiffness: (1/(2 beta)) M A_fd M^T + K A_fd K^T
///   diag_mass: (1/(2 beta)) M D^{-1} M^T + K D^{-1} K^T,  D = diag(M)
SparseMatrix schur_matrix(const SaddleSystem& sys, BsrVariant variant);

/// Per-level relaxation state bound to a hierarchy. Levels are indexed as in
/// the hierarchy; the coarsest level carries no smoother (it is solved
/// directly by the cycle).
class BsrSmoother {
public:
    BsrSmoother(const MgHierarchy& hier, BsrConfig cfg);

    /// One sweep: z <- z + omega_b * delta where K_bsr * delta = rhs - L z.
    void relax(int level, Vector& z, const Vector& rhs) const;

    /// Solves S delta_y = rhs_y per the configured Schur mode.
    Vector schur_solve(int level, const Vector& rhs_y) const;

    /// The inner multigrid path regardless of mode (exposed for testing).
    Vector inner_schur_solve(int level, const Vector& rhs_y) const;

    const SparseMatrix& schur(int level) const { return levels_[level].S; }
    const BsrConfig& config() const { return cfg_; }

private:
    struct LevelState {
        SparseMatrix S;
        Vector inv_diag_M;              // diag variant: 1/diag(M)
        BandCholesky chol;              // exact mode
        std::vector<SparseMatrix> inner_S;      // inner-mg mode, [0] = this level
        std::vector<Vector> inner_inv_diag;
        DenseLU inner_lu;
    };

    /// out = C^{-1} in on the stacked (f, u) segment.
    void apply_c_inverse(int level, const double* in, double* out) const;
    void inner_vcycle(int level, int depth, Vector& delta, const Vector& rhs) const;

    const MgHierarchy* hier_;
    BsrConfig cfg_;
    std::vector<LevelState> levels_;
};

}  // namespace ocmg

#endif  // OCMG_BSR_HPP
