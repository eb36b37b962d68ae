#include <cmath>
#include <random>

#include "doctest.h"
#include "ocmg/assembly.hpp"
#include "ocmg/runner.hpp"
#include "oracles.hpp"

using namespace ocmg;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("grid indexing and boundary classification") {
    const UniformGrid grid(8);
    CHECK(grid.h() == doctest::Approx(0.125));
    CHECK(grid.nodes_per_side() == 7);
    CHECK(grid.n_interior() == 49);
    CHECK(grid.index(1, 1) == 0);   // lexicographic, x fastest
    CHECK(grid.index(2, 1) == 1);
    CHECK(grid.index(1, 2) == 7);
    CHECK(grid.is_boundary(0, 3));
    CHECK(grid.is_boundary(8, 3));
    CHECK(grid.is_boundary(3, 0));
    CHECK(!grid.is_boundary(1, 1));
    CHECK_THROWS(UniformGrid(1));
}

TEST_CASE("1D stiffness: tridiagonal (1/h)[-1 2 -1], interior row sums vanish") {
    const SparseMatrix K1 = assemble_stiffness_1d(8);
    const double h = 1.0 / 8.0;
    CHECK(K1.n_rows == 7);
    const auto D = oracles::to_dense(K1);
    CHECK(D.at(3, 3) == doctest::Approx(2.0 / h).epsilon(1e-14));
    CHECK(D.at(3, 2) == doctest::Approx(-1.0 / h).epsilon(1e-14));
    // row 4 (index 3) is interior away from the boundary: sum 0
    double sum = 0.0;
    for (index_t j = 0; j < 7; ++j) sum += D.at(3, j);
    CHECK(std::abs(sum) <= 1e-12);
    // first row feels the eliminated boundary node: sum 1/h
    sum = 0.0;
    for (index_t j = 0; j < 7; ++j) sum += D.at(0, j);
    CHECK(sum == doctest::Approx(1.0 / h).epsilon(1e-13));
}

TEST_CASE("1D mass: tridiagonal (h/6)[1 4 1], interior row sum h") {
    const SparseMatrix M1 = assemble_mass_1d(8);
    const double h = 1.0 / 8.0;
    const auto D = oracles::to_dense(M1);
    CHECK(D.at(3, 3) == doctest::Approx(4.0 * h / 6.0).epsilon(1e-14));
    double sum = 0.0;
    for (index_t j = 0; j < 7; ++j) sum += D.at(3, j);
    CHECK(sum == doctest::Approx(h).epsilon(1e-13));
}

TEST_CASE("2D stiffness matches the element-loop quadrature oracle") {
    const UniformGrid grid(8);
    const SparseMatrix K = assemble_stiffness_2d(grid);
    CHECK(K.max_asymmetry() == 0.0);
    const oracles::Dense ref = oracles::assemble_q1_oracle(grid, /*want_mass=*/false);
    CHECK(oracles::max_diff(ref, K) <= 1e-14);
}

TEST_CASE("2D mass matches the oracle; deep-interior row sum is h^2") {
    const UniformGrid grid(8);
    const SparseMatrix M = assemble_mass_2d(grid);
    const oracles::Dense ref = oracles::assemble_q1_oracle(grid, /*want_mass=*/true);
    CHECK(oracles::max_diff(ref, M) <= 1e-14);

    const double h = grid.h();
    const index_t row = grid.index(4, 4);  // away from all boundaries
    const auto D = oracles::to_dense(M);
    double sum = 0.0;
    for (index_t j = 0; j < M.n_cols; ++j) sum += D.at(row, j);
    CHECK(sum == doctest::Approx(h * h).epsilon(1e-13));
}

TEST_CASE("five-point Laplacian: diagonal 4/h^2, smallest eigenvalue near 2 pi^2") {
    const UniformGrid grid(64);
    const SparseMatrix A = assemble_fd_laplacian(grid);
    const double h = grid.h();
    const Vector d = A.diag();
    for (double v : d) CHECK(v == doctest::Approx(4.0 / (h * h)).epsilon(1e-14));
    CHECK(A.max_asymmetry() == 0.0);

    // inverse power iteration with CG solves, independent of the closed form
    const double lam = oracles::smallest_eig_spd(A);
    CHECK(std::abs(lam - 2.0 * kPi * kPi) <= 0.05 * 2.0 * kPi * kPi);
}

TEST_CASE("saddle operator matches blockwise computation by parts") {
    const UniformGrid grid(8);
    const double beta = 1e-3;
    const SaddleSystem sys = assemble_saddle(grid, beta);
    const index_t m = grid.n_interior();
    CHECK(sys.beta == beta);
    CHECK(sys.L.n_rows == 3 * m);
    CHECK(sys.L.max_asymmetry() <= 1e-14);

    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    Vector z(3 * static_cast<std::size_t>(m));
    for (auto& v : z) v = val(gen);
    const Vector f(z.begin(), z.begin() + m);
    const Vector u(z.begin() + m, z.begin() + 2 * m);
    const Vector t(z.begin() + 2 * m, z.end());

    const Vector Mf = spmv(sys.M, f), Mu = spmv(sys.M, u), Mt = spmv(sys.M, t);
    const Vector Ku = spmv(sys.K, u), Kt = spmv(sys.K, t);
    const Vector Lz = spmv(sys.L, z);
    for (index_t i = 0; i < m; ++i) {
        CHECK(std::abs(Lz[i] - (2.0 * beta * Mf[i] - Mt[i])) <= 1e-13);
        CHECK(std::abs(Lz[m + i] - (Mu[i] + Kt[i])) <= 1e-13);
        CHECK(std::abs(Lz[2 * m + i] - (-Mf[i] + Ku[i])) <= 1e-13);
    }
}

TEST_CASE("compose_saddle_operator reproduces the assembled block operator") {
    const UniformGrid grid(8);
    const SaddleSystem sys = assemble_saddle(grid, 1e-2);
    const SparseMatrix L2 = compose_saddle_operator(sys.M, sys.K, 1e-2);
    CHECK(oracles::max_diff(oracles::to_dense(sys.L), L2) == 0.0);
}

TEST_CASE("right-hand side matches the per-element Gauss quadrature oracle") {
    const UniformGrid grid(8);
    const ScalarField u_hat = benchmark_u_hat;
    const ScalarField g = benchmark_u_hat;  // boundary data is the trace
    const ProblemData problem = assemble_rhs(grid, 1e-2, u_hat, g);
    const Vector ref = oracles::rhs_oracle(grid, u_hat, g);
    REQUIRE(problem.rhs.size() == ref.size());
    const index_t m = grid.n_interior();
    for (index_t i = 0; i < m; ++i) CHECK(problem.rhs[i] == 0.0);  // b_f = 0
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(std::abs(problem.rhs[i] - ref[i]) <= 1e-12);
}

TEST_CASE("constant state with matching boundary data drops the lift") {
    // u_hat = 1 everywhere, g = 1 on the boundary: the lifted field is 1 on
    // interior and 0 on boundary nodes, so b_u = M_ii * 1 and b_tau = -K_ib*1.
    const UniformGrid grid(8);
    auto one = [](double, double) { return 1.0; };
    const ProblemData problem = assemble_rhs(grid, 1e-2, one, one);
    const Vector ref = oracles::rhs_oracle(grid, one, one);
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(std::abs(problem.rhs[i] - ref[i]) <= 1e-13);
    // deep interior: b_u row sums the full mass stencil = h^2, b_tau = 0
    const index_t m = grid.n_interior();
    const index_t row = grid.index(4, 4);
    CHECK(problem.rhs[m + row] == doctest::Approx(grid.h() * grid.h()).epsilon(1e-12));
    CHECK(std::abs(problem.rhs[2 * m + row]) <= 1e-13);
}

TEST_CASE("benchmark desired state: quartic bump on the lower-left quadrant") {
    CHECK(benchmark_u_hat(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(benchmark_u_hat(0.25, 0.25) == doctest::Approx(0.0625));
    CHECK(benchmark_u_hat(0.5, 0.5) == doctest::Approx(0.0));
    CHECK(benchmark_u_hat(0.75, 0.25) == 0.0);   // outside the quadrant
    CHECK(benchmark_u_hat(0.25, 0.75) == 0.0);
}
