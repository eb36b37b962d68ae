#include "ocmg/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ocmg {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// High-frequency sample set: density x density lattice over the canonical
/// square minus the low square, plus the analytic extremal points.
std::vector<Frequency> high_frequency_samples(int density) {
    std::vector<Frequency> pts;
    pts.reserve(static_cast<std::size_t>(density) * density);
    const double step = 2.0 * kPi / density;
    for (int i = 0; i < density; ++i) {
        for (int j = 0; j < density; ++j) {
            const Frequency th{-0.5 * kPi + (i + 1) * step, -0.5 * kPi + (j + 1) * step};
            if (!th.is_low()) pts.push_back(th);
        }
    }
    pts.push_back({kPi, kPi});
    pts.push_back({0.5 * kPi, 0.5 * kPi});
    pts.push_back({0.0, 0.5 * kPi});
    pts.push_back({kPi, 0.0});
    return pts;
}

ComplexMatrix preconditioner(BsrVariant variant, Frequency th, double beta, double h) {
    return variant == BsrVariant::stiffness ? symbol_Kf(th, beta, h, 1.0)
                                            : symbol_KD(th, beta, h, 1.0);
}

}  // namespace

double smoothing_factor(double omega, BsrVariant variant, double beta, double h,
                        int grid_density) {
    if (grid_density < 32)
        throw std::invalid_argument("smoothing_factor: grid_density must be >= 32");
    double mu = 0.0;
    for (const Frequency& th : high_frequency_samples(grid_density)) {
        const ComplexMatrix L = symbol_saddle(th, beta, h);
        const ComplexMatrix K = preconditioner(variant, th, beta, h);
        ComplexMatrix S = solve(K, L);
        for (auto& e : S.entries) e *= -omega;
        for (int i = 0; i < 3; ++i) S(i, i) += 1.0;
        mu = std::max(mu, spectral_radius(S));
    }
    return mu;
}

OptimalSmoothing optimal_smoothing(BsrVariant variant, double beta, double h,
                                   int grid_density) {
    auto mu_of = [&](double w) { return smoothing_factor(w, variant, beta, h, grid_density); };

    // Golden section on (0, 2]; the objective is convex in omega.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1e-3, hi = 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = mu_of(x1), f2 = mu_of(x2);
    while (hi - lo > 1e-7) {
        if (f1 <= f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = mu_of(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = mu_of(x2);
        }
    }
    OptimalSmoothing best{0.5 * (lo + hi), mu_of(0.5 * (lo + hi))};

    // Closed-form cross-check: with eigenvalues of K~^{-1} L~ spanning
    // [c_min, c_max], the balanced damping is 2/(c_min + c_max).
    double c_min = 1e300, c_max = 0.0;
    for (const Frequency& th : high_frequency_samples(grid_density)) {
        const ComplexMatrix L = symbol_saddle(th, beta, h);
        const ComplexMatrix K = preconditioner(variant, th, beta, h);
        for (const cplx& ev : eigenvalues(solve(K, L))) {
            c_min = std::min(c_min, ev.real());
            c_max = std::max(c_max, ev.real());
        }
    }
    if (c_min > 0.0 && c_max > c_min) {
        const double w = 2.0 / (c_min + c_max);
        const double f = mu_of(w);
        if (f < best.mu) best = {w, f};
    }
    return best;
}

std::pair<double, double> ratio_range(int grid_density) {
    if (grid_density < 64)
        throw std::invalid_argument("ratio_range: grid_density must be >= 64");
    double lo = 1e300, hi = 0.0;
    for (const Frequency& th : high_frequency_samples(grid_density)) {
        const ScalarSymbols s = symbols_2d(th, 1.0);
        const double r = s.a * s.a_fd;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

}  // namespace ocmg
