#include "ocmg/tables.hpp"

#include <cmath>
#include <stdexcept>

namespace ocmg {

namespace {

const std::vector<double> kBetas{1e-2, 1e-4, 1e-6, 1e-8};
const std::vector<index_t> kNs{64, 128, 256};

int beta_index(double beta) {
    for (std::size_t i = 0; i < kBetas.size(); ++i)
        if (std::abs(beta - kBetas[i]) <= 1e-15 * kBetas[i]) return static_cast<int>(i);
    throw std::invalid_argument("table lookup: beta off-grid");
}

int n_index(index_t n, bool with_512) {
    switch (n) {
        case 64: return 0;
        case 128: return 1;
        case 256: return 2;
        case 512:
            if (with_512) return 3;
            break;
        default: break;
    }
    throw std::invalid_argument("table lookup: n off-grid");
}

// Measured W-cycle factors, exact relaxation: [beta][h][nu].
constexpr double kTable3[4][3][4] = {
    {{0.279, 0.093, 0.031, 0.010}, {0.275, 0.091, 0.030, 0.010}, {0.272, 0.090, 0.030, 0.010}},
    {{0.268, 0.090, 0.030, 0.010}, {0.264, 0.089, 0.029, 0.010}, {0.261, 0.088, 0.029, 0.010}},
    {{0.289, 0.094, 0.031, 0.012}, {0.276, 0.093, 0.030, 0.010}, {0.272, 0.092, 0.030, 0.010}},
    {{0.302, 0.098, 0.032, 0.011}, {0.299, 0.098, 0.032, 0.012}, {0.290, 0.096, 0.030, 0.012}},
};

// Measured W-cycle factors, inexact relaxation (3 inner V(2,2) cycles).
constexpr double kTable4[4][3][4] = {
    {{0.280, 0.092, 0.046, 0.044}, {0.275, 0.092, 0.046, 0.044}, {0.272, 0.090, 0.047, 0.045}},
    {{0.271, 0.089, 0.045, 0.043}, {0.267, 0.088, 0.046, 0.044}, {0.264, 0.086, 0.047, 0.045}},
    {{0.283, 0.092, 0.039, 0.025}, {0.280, 0.091, 0.044, 0.041}, {0.276, 0.090, 0.047, 0.045}},
    {{0.296, 0.096, 0.032, 0.010}, {0.293, 0.095, 0.034, 0.025}, {0.289, 0.094, 0.043, 0.030}},
};

// Iteration counts to a 1e-10 relative residual: [h][beta].
constexpr double kTable5[4][4] = {
    {17, 17, 17, 19}, {17, 17, 17, 18}, {18, 18, 18, 18}, {19, 19, 19, 19}};
constexpr double kTable6[4][4] = {
    {12, 12, 11, 10}, {12, 12, 12, 11}, {13, 13, 12, 12}, {13, 13, 13, 13}};

// LFA two-grid factors by nu (h- and beta-independent).
constexpr double kLfaByNu[4] = {0.333, 0.111, 0.037, 0.012};

}  // namespace

ExpectedEntry TableSpec::expected(double beta, index_t n, int nu) const {
    const bool with_512 = !ns.empty() && ns.back() == 512;
    switch (id) {
        case 1:
            (void)beta_index(beta);
            (void)n_index(n, false);
            if (nu != 1) throw std::invalid_argument("table 1: nu must be 1");
            return {kLfaByNu[0], 0.001, 0.0};
        case 2:
            (void)n_index(n, false);
            if (nu < 2 || nu > 4) throw std::invalid_argument("table 2: nu in {2,3,4}");
            return {kLfaByNu[nu - 1], 0.001, 0.0};
        case 3:
            if (nu < 1 || nu > 4) throw std::invalid_argument("table 3: nu in {1..4}");
            return {kTable3[beta_index(beta)][n_index(n, false)][nu - 1], 0.02, 0.0};
        case 4: {
            if (nu < 1 || nu > 4) throw std::invalid_argument("table 4: nu in {1..4}");
            const double v = kTable4[beta_index(beta)][n_index(n, false)][nu - 1];
            if (nu >= 3) return {v, 0.0, 0.06};
            return {v, 0.02, 0.0};
        }
        case 5:
            if (nu != 1) throw std::invalid_argument("table 5: nu must be 1");
            return {kTable5[n_index(n, with_512)][beta_index(beta)], 2.0, 0.0};
        case 6:
            if (nu != 2) throw std::invalid_argument("table 6: nu must be 2");
            return {kTable6[n_index(n, with_512)][beta_index(beta)], 2.0, 0.0};
        default:
            throw std::invalid_argument("table id must be 1..6");
    }
}

TableSpec table_spec(int id, bool include_512) {
    TableSpec t;
    t.id = id;
    switch (id) {
        case 1:
            t.metric = "rho_lfa";
            t.betas = kBetas;
            t.ns = kNs;
            t.nus = {1};
            break;
        case 2:
            t.metric = "rho_lfa";
            t.betas = {1e-2};
            t.ns = kNs;
            t.nus = {2, 3, 4};
            break;
        case 3:
        case 4:
            t.metric = "rho_hat";
            t.betas = kBetas;
            t.ns = kNs;
            t.nus = {1, 2, 3, 4};
            break;
        case 5:
        case 6:
            t.metric = "iters";
            t.betas = kBetas;
            t.ns = kNs;
            if (include_512) t.ns.push_back(512);
            t.nus = {id == 5 ? 1 : 2};
            break;
        default:
            throw std::invalid_argument("table id must be 1..6");
    }
    return t;
}

}  // namespace ocmg
