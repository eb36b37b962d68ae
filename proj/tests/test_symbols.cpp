#include <cmath>
#include <random>

#include "doctest.h"
#include "ocmg/assembly.hpp"
#include "ocmg/eig.hpp"
#include "ocmg/symbols.hpp"
#include "oracles.hpp"

using namespace ocmg;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("canonical range and low-frequency classification") {
    const Frequency a{-kPi, 2.0 * kPi};
    const Frequency ca = a.canonical();
    CHECK(ca.theta1 == doctest::Approx(kPi));
    CHECK(std::abs(ca.theta2) <= 1e-15);
    // the open end -pi/2 wraps to 3pi/2
    const Frequency b{-0.5 * kPi, 0.0};
    CHECK(b.canonical().theta1 == doctest::Approx(1.5 * kPi));
    CHECK(Frequency{0.0, 0.0}.is_low());
    CHECK(Frequency{0.3, -0.4}.is_low());
    CHECK(!Frequency{kPi, 0.0}.is_low());
    CHECK(!Frequency{0.5 * kPi, 0.0}.is_low());  // pi/2 counts as high
    CHECK(Frequency{2.0 * kPi, 2.0 * kPi}.is_low());  // aliases to (0,0)
}

TEST_CASE("1D symbols at theta = pi") {
    const double h = 1.0 / 8.0;
    const auto [k1, m1] = symbols_1d(kPi, h);
    CHECK(k1 == doctest::Approx(4.0 / h).epsilon(1e-14));
    CHECK(m1 == doctest::Approx(h / 3.0).epsilon(1e-14));
}

TEST_CASE("1D symbols match the periodic-grid amplification oracle") {
    const double h = 1.0 / 8.0;
    const index_t N = 8;
    const Stencil1D sk = stencil_stiffness_1d(h);
    const Stencil1D sm = stencil_mass_1d(h);
    for (index_t k = 0; k < N; ++k) {
        const double theta = 2.0 * kPi * k / N;
        const auto [ks, ms] = symbols_1d(theta, h);
        const cplx lk = oracles::periodic_amplification_1d(sk.w, theta, N);
        const cplx lm = oracles::periodic_amplification_1d(sm.w, theta, N);
        CHECK(std::abs(lk - ks) <= 1e-13 * (1.0 + std::abs(ks)));
        CHECK(std::abs(lm - ms) <= 1e-13);
        CHECK(std::abs(lk.imag()) <= 1e-13);  // symmetric stencils: real symbols
    }
}

TEST_CASE("2D scalar symbols match the periodic-grid oracle") {
    const double h = 1.0 / 8.0;
    const index_t N = 8;
    const Stencil3x3 sm = stencil_mass_2d(h);
    const Stencil3x3 sk = stencil_stiffness_2d();
    double fd[3][3];
    oracles::fd_stencil(h, fd);
    for (index_t k1 = 0; k1 < N; ++k1)
        for (index_t k2 = 0; k2 < N; ++k2) {
            const double t1 = 2.0 * kPi * k1 / N;
            const double t2 = 2.0 * kPi * k2 / N;
            const ScalarSymbols s = symbols_2d({t1, t2}, h);
            CHECK(std::abs(oracles::periodic_amplification(sm.w, t1, t2, N) - s.a) <= 1e-13);
            CHECK(std::abs(oracles::periodic_amplification(sk.w, t1, t2, N) - s.b) <= 1e-12);
            CHECK(std::abs(oracles::periodic_amplification(fd, t1, t2, N) - s.a_fd) <=
                  1e-12 * (1.0 + std::abs(s.a_fd)));
            CHECK(s.a_D == doctest::Approx(4.0 * h * h / 9.0).epsilon(1e-15));
        }
}

TEST_CASE("ratio a * a_fd attains the Lemma endpoints") {
    const double h = 1.0 / 64.0;  // the product is h-free
    const ScalarSymbols lo = symbols_2d({kPi, kPi}, h);
    CHECK(lo.a * lo.a_fd == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    const ScalarSymbols hi = symbols_2d({0.5 * kPi, 0.5 * kPi}, h);
    CHECK(hi.a * hi.a_fd == doctest::Approx(16.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("saddle symbol matches the periodic block-operator oracle") {
    const double h = 1.0 / 8.0;
    const double beta = 1e-2;
    const index_t N = 8;
    for (index_t k1 = 0; k1 < N; ++k1)
        for (index_t k2 = 0; k2 < N; ++k2) {
            const double t1 = 2.0 * kPi * k1 / N;
            const double t2 = 2.0 * kPi * k2 / N;
            const ComplexMatrix L = symbol_saddle({t1, t2}, beta, h);
            const ComplexMatrix ref = oracles::periodic_saddle_symbol(t1, t2, beta, h, N);
            CHECK((L - ref).frobenius_norm() <= 1e-12);
        }
}

TEST_CASE("singular frequency: a_fd vanishes only at theta = (0,0) mod 2pi") {
    const double h = 1.0 / 8.0;
    CHECK(symbols_2d({0.0, 0.0}, h).singular);
    CHECK(symbols_2d({2.0 * kPi, -2.0 * kPi}, h).singular);
    CHECK(!symbols_2d({0.01, 0.0}, h).singular);
    CHECK_THROWS_AS((void)symbols_2d({0.0, 0.0}, h).a_hat(), singular_frequency);
    CHECK_THROWS_AS(symbol_Kf({0.0, 0.0}, 1e-2, h, 1.0), singular_frequency);
    CHECK_NOTHROW(symbol_KD({0.0, 0.0}, 1e-2, h, 1.0));  // diag variant never needs a_hat
}

TEST_CASE("preconditioned saddle symbol has eigenvalues {1, 1, a*a_fd}") {
    // The pair at 1 shares a single eigenvector, so computed eigenvalues may
    // split by ~sqrt(eps) around it. The elementary symmetric functions are
    // immune to that split (it cancels to second order), and two real cubics
    // with equal coefficients have equal roots, so comparing e1, e2, e3
    // against those of (x-1)^2 (x-c) verifies the multiset {1, 1, c} tightly.
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> angle(-0.5 * kPi, 1.5 * kPi);
    const double h = 1.0 / 64.0;
    const double beta = 1e-4;
    int checked = 0;
    while (checked < 100) {
        const Frequency theta{angle(gen), angle(gen)};
        const ScalarSymbols s = symbols_2d(theta, h);
        if (s.singular) continue;
        const ComplexMatrix L = symbol_saddle(theta, beta, h);
        const ComplexMatrix Kf = symbol_Kf(theta, beta, h, 1.0);
        const std::vector<cplx> lam = eigenvalues(solve(Kf, L));
        const double c = s.a * s.a_fd;
        const cplx e1 = lam[0] + lam[1] + lam[2];
        const cplx e2 = lam[0] * lam[1] + lam[0] * lam[2] + lam[1] * lam[2];
        const cplx e3 = lam[0] * lam[1] * lam[2];
        CHECK(std::abs(e1 - (2.0 + c)) <= 1e-10);
        CHECK(std::abs(e2 - (1.0 + 2.0 * c)) <= 1e-10);
        CHECK(std::abs(e3 - c) <= 1e-10);
        ++checked;
    }
}

TEST_CASE("third eigenvalue at (pi,pi) is 8/9") {
    const double h = 1.0 / 64.0;
    const ComplexMatrix L = symbol_saddle({kPi, kPi}, 1e-2, h);
    const ComplexMatrix Kf = symbol_Kf({kPi, kPi}, 1e-2, h, 1.0);
    std::vector<cplx> lam = eigenvalues(solve(Kf, L));
    double third = 1e300;
    for (const cplx& l : lam) third = std::min(third, l.real());
    CHECK(third == doctest::Approx(8.0 / 9.0).epsilon(1e-10));
}
