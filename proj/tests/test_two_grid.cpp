#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "doctest.h"
#include "ocmg/eig.hpp"
#include "ocmg/two_grid.hpp"
#include "oracles.hpp"

using namespace ocmg;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Canonical frequency pair rounded for set comparison.
std::pair<long, long> key(const Frequency& f) {
    const Frequency c = f.canonical();
    return {std::lround(c.theta1 * 1e9), std::lround(c.theta2 * 1e9)};
}

}  // namespace

TEST_CASE("harmonics: the four standard-coarsening shifts, exactly one low") {
    const Frequency theta{0.1, 0.2};
    const auto harm = harmonics(theta);
    CHECK(harm[0].theta1 == doctest::Approx(0.1));
    CHECK(harm[1].theta1 == doctest::Approx(0.1 + kPi));
    CHECK(harm[1].theta2 == doctest::Approx(0.2));
    CHECK(harm[2].theta2 == doctest::Approx(0.2 + kPi));
    CHECK(harm[3].theta1 == doctest::Approx(0.1 + kPi));
    int low_count = 0;
    for (const Frequency& f : harm) low_count += f.is_low() ? 1 : 0;
    CHECK(low_count == 1);
    CHECK(harm[0].is_low());
}

TEST_CASE("harmonics rejects high frequencies") {
    CHECK_THROWS(harmonics(Frequency{kPi, 0.0}));
    CHECK_THROWS(harmonics(Frequency{0.6 * kPi, 0.1}));
}

TEST_CASE("the shift set of theta and of theta+(pi,pi) coincide") {
    std::mt19937_64 gen(51);
    std::uniform_real_distribution<double> low(-0.5 * kPi, 0.5 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const Frequency theta{low(gen), low(gen)};
        std::set<std::pair<long, long>> set_a, set_b;
        for (const Frequency& f : harmonics(theta)) set_a.insert(key(f));
        const Frequency shifted{theta.theta1 + kPi, theta.theta2 + kPi};
        const double offs[4][2] = {{0, 0}, {kPi, 0}, {0, kPi}, {kPi, kPi}};
        for (const auto& o : offs)
            set_b.insert(key(Frequency{shifted.theta1 + o[0], shifted.theta2 + o[1]}));
        CHECK(set_a == set_b);
    }
}

TEST_CASE("two_grid_symbol is 12x12 and raises at the singular frequency") {
    TwoGridConfig cfg;
    const ComplexMatrix E = two_grid_symbol({0.3, -0.2}, cfg);
    CHECK(E.n == 12);
    CHECK_THROWS_AS(two_grid_symbol({0.0, 0.0}, cfg), singular_frequency);
}

TEST_CASE("pure coarse-grid correction is a projector") {
    TwoGridConfig cfg;
    cfg.nu1 = 0;
    cfg.nu2 = 0;
    std::mt19937_64 gen(52);
    std::uniform_real_distribution<double> low(-0.5 * kPi + 0.05, 0.5 * kPi - 0.05);
    for (int trial = 0; trial < 10; ++trial) {
        const Frequency theta{low(gen), low(gen)};
        const ComplexMatrix E = two_grid_symbol(theta, cfg);
        CHECK((E * E - E).frobenius_norm() <= 1e-10);
    }
}

TEST_CASE("cyclic invariance: spectrum depends only on nu1 + nu2") {
    std::mt19937_64 gen(53);
    std::uniform_real_distribution<double> low(-0.5 * kPi + 0.05, 0.5 * kPi - 0.05);
    for (int trial = 0; trial < 10; ++trial) {
        const Frequency theta{low(gen), low(gen)};
        TwoGridConfig split;
        split.nu1 = 1;
        split.nu2 = 1;
        TwoGridConfig merged;
        merged.nu1 = 2;
        merged.nu2 = 0;
        const std::vector<cplx> a = eigenvalues(two_grid_symbol(theta, split));
        const std::vector<cplx> b = eigenvalues(two_grid_symbol(theta, merged));
        // QR accuracy on these nonnormal 12x12 symbols is ~1e-9 per eigenvalue
        CHECK(oracles::spectrum_distance(a, b) <= 2e-8);
    }
}

TEST_CASE("two-grid factor is invariant under merging the smoothing split") {
    TwoGridConfig split;
    split.nu1 = 1;
    split.nu2 = 1;
    TwoGridConfig merged;
    merged.nu1 = 2;
    merged.nu2 = 0;
    CHECK(std::abs(two_grid_factor(split) - two_grid_factor(merged)) <= 1e-3);
}

TEST_CASE("two-grid factors reproduce the nu sweep") {
    TwoGridConfig cfg;  // beta = 1e-2, h = 1/64, stiffness, omega = 0.75
    cfg.nu1 = 1;
    cfg.nu2 = 0;
    CHECK(std::abs(two_grid_factor(cfg) - 0.333) <= 1e-3);
    cfg.nu1 = 2;
    cfg.nu2 = 1;  // nu = 3
    cfg.h = 1.0 / 128.0;
    CHECK(std::abs(two_grid_factor(cfg) - 0.037) <= 1e-3);
    cfg.nu1 = 2;
    cfg.nu2 = 2;  // nu = 4
    CHECK(std::abs(two_grid_factor(cfg) - 0.012) <= 1e-3);
}

TEST_CASE("two-grid factor is beta-robust") {
    TwoGridConfig a, b;
    a.nu1 = b.nu1 = 1;
    a.beta = 1e-2;
    b.beta = 1e-8;
    CHECK(std::abs(two_grid_factor(a) - two_grid_factor(b)) <= 1e-3);
}

TEST_CASE("two_grid_factor validates its configuration") {
    TwoGridConfig cfg;
    cfg.n_samples = 1;
    CHECK_THROWS(two_grid_factor(cfg));
    cfg.n_samples = 32;
    cfg.tau = 0.0;
    CHECK_THROWS(two_grid_factor(cfg));
}
