#include <random>

#include "doctest.h"
#include "ocmg/assembly.hpp"
#include "ocmg/sparse.hpp"
#include "oracles.hpp"

using namespace ocmg;

TEST_CASE("spmv hand example") {
    // [[2,0],[1,3]] * (1,1) = (2,4)
    SparseMatrix A = SparseMatrix::from_triplets(2, 2, {0, 1, 1}, {0, 0, 1}, {2.0, 1.0, 3.0});
    const Vector y = spmv(A, Vector{1.0, 1.0});
    CHECK(y[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(y[1] == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("from_triplets sums duplicates and sorts columns") {
    SparseMatrix A =
        SparseMatrix::from_triplets(2, 3, {0, 0, 0, 1}, {2, 0, 2, 1}, {1.0, 5.0, 2.5, -1.0});
    CHECK(A.check_invariants());
    const auto D = oracles::to_dense(A);
    CHECK(D.at(0, 0) == 5.0);
    CHECK(D.at(0, 2) == 3.5);
    CHECK(D.at(1, 1) == -1.0);
}

TEST_CASE("spmv matches dense oracle on random matrices") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        SparseMatrix A = oracles::random_sparse(8, 8, 0.4, gen);
        Vector x(8);
        for (auto& v : x) v = val(gen);
        const Vector y = spmv(A, x);
        const auto D = oracles::to_dense(A);
        for (index_t i = 0; i < 8; ++i) {
            double yi = 0.0;
            for (index_t j = 0; j < 8; ++j) yi += D.at(i, j) * x[j];
            CHECK(std::abs(y[i] - yi) <= 1e-13);
        }
    }
}

TEST_CASE("add_scaled of disjoint-sparsity matrices gives union sparsity") {
    SparseMatrix A = SparseMatrix::from_triplets(2, 2, {0}, {0}, {2.0});
    SparseMatrix B = SparseMatrix::from_triplets(2, 2, {1}, {1}, {3.0});
    SparseMatrix C = add_scaled(A, B, 1.0, 1.0);
    CHECK(C.values.size() == 2);
    const auto D = oracles::to_dense(C);
    CHECK(D.at(0, 0) == 2.0);
    CHECK(D.at(1, 1) == 3.0);
}

TEST_CASE("add_scaled matches dense oracle") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        SparseMatrix A = oracles::random_sparse(8, 8, 0.35, gen);
        SparseMatrix B = oracles::random_sparse(8, 8, 0.35, gen);
        const double c1 = 1.5, c2 = -0.25;
        const auto D = oracles::add(oracles::to_dense(A), oracles::to_dense(B), c1, c2);
        CHECK(oracles::max_diff(D, add_scaled(A, B, c1, c2)) <= 1e-13);
    }
}

TEST_CASE("spgemm matches dense multiplication oracle") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        SparseMatrix A = oracles::random_sparse(6, 7, 0.4, gen);
        SparseMatrix B = oracles::random_sparse(7, 6, 0.4, gen);
        const auto D = oracles::matmul(oracles::to_dense(A), oracles::to_dense(B));
        const SparseMatrix C = spgemm(A, B);
        CHECK(C.check_invariants());
        CHECK(oracles::max_diff(D, C) <= 1e-14);
    }
}

TEST_CASE("kron matches dense oracle and reproduces the 2D operators") {
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 50; ++trial) {
        SparseMatrix A = oracles::random_sparse(4, 5, 0.5, gen);
        SparseMatrix B = oracles::random_sparse(3, 4, 0.5, gen);
        const auto D = oracles::kron(oracles::to_dense(A), oracles::to_dense(B));
        CHECK(oracles::max_diff(D, kron(A, B)) <= 1e-14);
    }

    // kron of the 1D tridiagonal factors reproduces the assembled 2D
    // operators: K2 = K1 (x) M1 + M1 (x) K1, M2 = M1 (x) M1.
    const UniformGrid grid(8);
    const SparseMatrix K1 = assemble_stiffness_1d(8);
    const SparseMatrix M1 = assemble_mass_1d(8);
    const SparseMatrix K2 = add_scaled(kron(K1, M1), kron(M1, K1), 1.0, 1.0);
    const SparseMatrix M2 = kron(M1, M1);
    CHECK(oracles::max_diff(oracles::to_dense(assemble_stiffness_2d(grid)), K2) <= 1e-14);
    CHECK(oracles::max_diff(oracles::to_dense(assemble_mass_2d(grid)), M2) <= 1e-14);
}

TEST_CASE("transpose, diag, asymmetry, max_abs") {
    std::mt19937_64 gen(15);
    SparseMatrix A = oracles::random_sparse(8, 8, 0.4, gen);
    const auto D = oracles::to_dense(A);
    const auto Dt = oracles::to_dense(A.transposed());
    double max_abs = 0.0, max_asym = 0.0;
    for (index_t i = 0; i < 8; ++i)
        for (index_t j = 0; j < 8; ++j) {
            CHECK(Dt.at(j, i) == D.at(i, j));
            max_abs = std::max(max_abs, std::abs(D.at(i, j)));
            max_asym = std::max(max_asym, std::abs(D.at(i, j) - D.at(j, i)));
        }
    CHECK(A.max_abs() == doctest::Approx(max_abs).epsilon(1e-15));
    CHECK(A.max_asymmetry() == doctest::Approx(max_asym).epsilon(1e-12));
    const Vector d = A.diag();
    for (index_t i = 0; i < 8; ++i) CHECK(d[i] == D.at(i, i));

    const SparseMatrix I = SparseMatrix::identity(3);
    CHECK(oracles::to_dense(I).at(1, 1) == 1.0);
    CHECK(I.values.size() == 3);
    const SparseMatrix G = SparseMatrix::diagonal({2.0, 3.0});
    CHECK(oracles::to_dense(G).at(1, 1) == 3.0);
}

TEST_CASE("cg_solve recovers ones from b = A*ones on the FD Laplacian") {
    const UniformGrid grid(16);
    const SparseMatrix A = assemble_fd_laplacian(grid);
    const Vector ones(A.n_rows, 1.0);
    const Vector b = spmv(A, ones);
    const CgResult res = cg_solve(A, b, 1e-12, 2000);
    CHECK(res.iterations > 0);
    double err = 0.0;
    for (double v : res.x) err = std::max(err, std::abs(v - 1.0));
    CHECK(err <= 1e-9);
}

TEST_CASE("cg_solve honors the relative residual contract") {
    const UniformGrid grid(16);
    const SparseMatrix A = assemble_fd_laplacian(grid);
    Vector b(A.n_rows);
    std::mt19937_64 gen(16);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (auto& v : b) v = val(gen);
    const double tol = 1e-10;
    const Vector d = A.diag();
    const CgResult res = cg_solve(A, b, tol, 5000, &d);
    Vector r = spmv(A, res.x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    CHECK(norm2(r) <= tol * norm2(b) * (1.0 + 1e-12));
}

TEST_CASE("cg_solve throws when the iteration cap is too small") {
    const UniformGrid grid(16);
    const SparseMatrix A = assemble_fd_laplacian(grid);
    const Vector b(A.n_rows, 1.0);
    CHECK_THROWS(cg_solve(A, b, 1e-14, 2));
}

TEST_CASE("vector helpers") {
    Vector a{1.0, 2.0, 2.0};
    Vector b{3.0, 0.0, 4.0};
    CHECK(dot(a, b) == doctest::Approx(11.0));
    CHECK(norm2(a) == doctest::Approx(3.0));
    axpy(2.0, b, a);  // a += 2 b
    CHECK(a[2] == doctest::Approx(10.0));
    scale(a, 0.5);
    CHECK(a[0] == doctest::Approx(3.5));
}
