#include "ocmg/two_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ocmg {

namespace {
constexpr double kPi = 3.14159265358979323846;

ComplexMatrix matrix_power(const ComplexMatrix& A, int p) {
    ComplexMatrix R = ComplexMatrix::identity(A.n);
    for (int i = 0; i < p; ++i) R = R * A;
    return R;
}
}  // namespace

std::array<Frequency, 4> harmonics(Frequency theta) {
    if (!theta.is_low()) throw std::invalid_argument("harmonics: theta must be low");
    const Frequency c = theta.canonical();
    return {c,
            Frequency{c.theta1 + kPi, c.theta2}.canonical(),
            Frequency{c.theta1, c.theta2 + kPi}.canonical(),
            Frequency{c.theta1 + kPi, c.theta2 + kPi}.canonical()};
}

ComplexMatrix two_grid_symbol(Frequency theta, const TwoGridConfig& cfg) {
    const auto harm = harmonics(theta);

    std::array<ComplexMatrix, 4> L, S_nu1, S_nu2;
    std::array<double, 4> p;
    for (int a = 0; a < 4; ++a) {
        const Frequency th = harm[a];
        L[a] = symbol_saddle(th, cfg.beta, cfg.h);
        const ComplexMatrix K = cfg.variant == BsrVariant::stiffness
                                    ? symbol_Kf(th, cfg.beta, cfg.h, cfg.alpha)
                                    : symbol_KD(th, cfg.beta, cfg.h, cfg.alpha);
        ComplexMatrix S = solve(K, L[a]);
        for (auto& e : S.entries) e *= -cfg.omega;
        for (int i = 0; i < 3; ++i) S(i, i) += 1.0;
        S_nu1[a] = matrix_power(S, cfg.nu1);
        S_nu2[a] = matrix_power(S, cfg.nu2);
        p[a] = 0.25 * (1.0 + std::cos(th.theta1)) * (1.0 + std::cos(th.theta2));
    }

    // Galerkin coarse symbol: L2h = sum_a p_a^2 L_a (3x3).
    ComplexMatrix L2h(3);
    for (int a = 0; a < 4; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) L2h(i, j) += p[a] * p[a] * L[a](i, j);

    ComplexMatrix X;
    try {
        X = solve(L2h, ComplexMatrix::identity(3));
    } catch (const std::runtime_error&) {
        throw singular_frequency{};
    }

    // Coarse-grid correction: block (a, b) = delta_ab I - p_a p_b X L_b.
    // Then E = S^nu2 * CGC * S^nu1 uses the block-diagonal structure of S.
    ComplexMatrix E(12);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            ComplexMatrix blk = X * L[b];
            for (auto& e : blk.entries) e *= -p[a] * p[b];
            if (a == b)
                for (int i = 0; i < 3; ++i) blk(i, i) += 1.0;
            blk = S_nu2[a] * blk * S_nu1[b];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) E(3 * a + i, 3 * b + j) = blk(i, j);
        }
    }
    return E;
}

double two_grid_factor(const TwoGridConfig& cfg) {
    if (cfg.n_samples < 2) throw std::invalid_argument("two_grid_factor: n_samples >= 2");
    if (cfg.tau <= 0.0) throw std::invalid_argument("two_grid_factor: tau must be positive");
    const double lo = -0.5 * kPi + cfg.tau;
    const double hi = 0.5 * kPi - cfg.tau;
    const double step = (hi - lo) / (cfg.n_samples - 1);
    double rho = 0.0;
    for (int i = 0; i < cfg.n_samples; ++i) {
        for (int j = 0; j < cfg.n_samples; ++j) {
            const Frequency th{lo + i * step, lo + j * step};
            rho = std::max(rho, spectral_radius(two_grid_symbol(th, cfg)));
        }
    }
    return rho;
}

}  // namespace ocmg
