/// @file smoothing.hpp
/// @brief LFA smoothing factors of the Braess-Sarazin relaxation variants and
/// the optimal-damping search.

#ifndef OCMG_SMOOTHING_HPP
#define OCMG_SMOOTHING_HPP

#include <utility>

#include "ocmg/bsr.hpp"
#include "ocmg/symbols.hpp"

namespace ocmg {

/// max over sampled high frequencies of rho(I - omega K~^{-1} L~), where K~
/// is the stiffness-variant (alpha = 1) or diag-variant preconditioner
/// symbol. The lattice is augmented with the exact extremal frequencies
/// (pi,pi), (pi/2,pi/2), (0,pi/2), (pi,0).
double smoothing_factor(double omega, BsrVariant variant, double beta, double h,
                        int grid_density = 32);

struct OptimalSmoothing {
    double omega = 0.0;
    double mu = 0.0;
};

/// Minimizes smoothing_factor over omega in (0, 2] by golden section (the
/// objective is a max of convex envelopes |1 - omega c|, hence convex), then
/// cross-checks the two-envelope closed form omega* = 2/(c_min + c_max) and
/// keeps whichever is better.
OptimalSmoothing optimal_smoothing(BsrVariant variant, double beta, double h,
                                   int grid_density = 32);

/// (min, max) of a * a_fd over high frequencies; equals (8/9, 16/9), attained
/// at (pi,pi) and (pi/2,pi/2). The product is h-free.
std::pair<double, double> ratio_range(int grid_density);

}  // namespace ocmg

#endif  // OCMG_SMOOTHING_HPP
