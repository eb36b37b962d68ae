/// @file mm_io.hpp
/// @brief MatrixMarket coordinate-format export for debugging.

#ifndef OCMG_MM_IO_HPP
#define OCMG_MM_IO_HPP

#include <string>

#include "ocmg/sparse.hpp"

namespace ocmg {

/// Coordinate-format text ("%%MatrixMarket matrix coordinate real general"),
/// 1-based indices, %.17g values.
std::string to_matrix_market(const SparseMatrix& A);

}  // namespace ocmg

#endif  // OCMG_MM_IO_HPP
