/// @file hierarchy.hpp
/// @brief Grid hierarchy for the three-field saddle system: Galerkin-coarsened
/// M and K, rediscretized five-point Laplacian, per-level transfers, and a
/// dense LU factorization of the coarsest operator.

#ifndef OCMG_HIERARCHY_HPP
#define OCMG_HIERARCHY_HPP

#include <vector>

#include "ocmg/assembly.hpp"
#include "ocmg/dense.hpp"
#include "ocmg/transfer.hpp"

namespace ocmg {

/// One level of the hierarchy. P maps the next-coarser level to this one
/// (scalar and three-field variants); both are empty on the coarsest level.
struct Level {
    UniformGrid grid;
    SaddleSystem sys;
    SparseMatrix P, R;    // scalar transfers (R = P^T)
    SparseMatrix P3, R3;  // block-diagonal replication for (f, u, tau)
};

struct MgHierarchy {
    double beta = 0.0;
    std::vector<Level> levels;  // [0] is finest
    DenseLU coarse_lu;          // factorization of the coarsest L

    int n_levels() const { return static_cast<int>(levels.size()); }
    const Level& finest() const { return levels.front(); }
    const Level& coarsest() const { return levels.back(); }
};

/// Builds levels from n_fine down to a 4x4 mesh (or fewer when max_levels > 0
/// caps the depth). M and K are coarsened by the Galerkin product with the
/// bilinear transfers; A_fd is reassembled at each level's mesh size; the
/// block operator L is recomposed from the coarsened M and K, which equals
/// the block-transfer Galerkin product because the transfers are
/// block-diagonal.
MgHierarchy build_hierarchy(index_t n_fine, double beta, int max_levels = 0);

}  // namespace ocmg

#endif  // OCMG_HIERARCHY_HPP
