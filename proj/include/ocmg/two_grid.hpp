/// @file two_grid.hpp
/// @brief 12x12 two-grid error-propagation symbol over the four coarsening
/// harmonics and the LFA two-grid convergence factor on the tau-shifted
/// sampling lattice.

#ifndef OCMG_TWO_GRID_HPP
#define OCMG_TWO_GRID_HPP

#include <array>

#include "ocmg/bsr.hpp"
#include "ocmg/symbols.hpp"

namespace ocmg {

struct TwoGridConfig {
    int nu1 = 1;
    int nu2 = 0;
    int n_samples = 32;                           // lattice points per axis
    double tau = 3.14159265358979323846 / 64.0;   // lattice shift off theta = 0
    double beta = 1e-2;
    double h = 1.0 / 64.0;
    BsrVariant variant = BsrVariant::stiffness;
    double omega = 0.75;
    double alpha = 1.0;
};

/// The four frequencies aliased under standard coarsening, in the fixed shift
/// order [(0,0), (pi,0), (0,pi), (pi,pi)], each reduced to the canonical
/// range. Throws if theta is not a low frequency.
std::array<Frequency, 4> harmonics(Frequency theta);

/// E~(theta) = S~^nu2 (I - P~ L2h~^{-1} R~ L~) S~^nu1 on the stacked
/// harmonic space (4 harmonics x 3 fields). The prolongation symbol per
/// harmonic is the scalar bilinear weight 1/4 (1+cos t1)(1+cos t2) replicated
/// over the fields, R~ = P~^H, and L2h~ = R~ L~ P~ (Galerkin).
ComplexMatrix two_grid_symbol(Frequency theta, const TwoGridConfig& cfg);

/// max spectral radius of E~ over the n_samples^2 lattice on
/// [-pi/2+tau, pi/2-tau]^2.
double two_grid_factor(const TwoGridConfig& cfg);

}  // namespace ocmg

#endif  // OCMG_TWO_GRID_HPP
