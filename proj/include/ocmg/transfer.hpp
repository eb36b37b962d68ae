/// @file transfer.hpp
/// @brief Bilinear interpolation between nested interior grids, its adjoint
/// restriction, and the Galerkin triple product.

#ifndef OCMG_TRANSFER_HPP
#define OCMG_TRANSFER_HPP

#include "ocmg/assembly.hpp"
#include "ocmg/sparse.hpp"

namespace ocmg {

/// Scalar bilinear interpolation (fine interior x coarse interior):
/// coincident nodes weight 1, edge midpoints 1/2 + 1/2, cell centers four
/// 1/4 taps; taps that land on the boundary are dropped.
SparseMatrix prolongation(const UniformGrid& coarse, const UniformGrid& fine);

/// R = P^T.
SparseMatrix restriction(const SparseMatrix& P);

/// diag(P, P, P) for the three-field system.
SparseMatrix block_diag3(const SparseMatrix& P);

/// L_2h = R L_h P.
SparseMatrix galerkin_coarsen(const SparseMatrix& L_h, const SparseMatrix& P,
                              const SparseMatrix& R);

}  // namespace ocmg

#endif  // OCMG_TRANSFER_HPP
