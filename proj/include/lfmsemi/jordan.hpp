#pragma once

#include <utility>
#include <vector>

#include "lfmsemi/linalg.hpp"

namespace lfmsemi {

struct JordanBlock {
  Complex eigenvalue;
  int size = 1;  // 1, 2 or 3
};

// M = S * Lambda * S_inv with Lambda upper-triangular Jordan (ones on the
// superdiagonal inside each block). Blocks are ordered canonically:
// size descending, then |eigenvalue| descending, then arg descending.
struct JordanDecomposition {
  Mat3 S;
  std::vector<JordanBlock> blocks;
  Mat3 S_inv;
  double source_norm = 0.0;  // ||M||_F of the factored matrix

  Mat3 jordan_matrix() const;
  Mat3 reconstruct() const { return S * jordan_matrix() * S_inv; }

  // Column of S where this block's chain starts (its eigenvector).
  int block_offset(int block_index) const;
};

// Roots of the characteristic cubic, closed form (Cardano over C) polished by
// Newton steps; roots within tol::cluster * ||m||_F are merged with summed
// multiplicity. Sorted by |eigenvalue| descending, then arg descending.
std::vector<std::pair<Complex, int>> eigenvalues3(const Mat3& m);

JordanDecomposition jordan_form(const Mat3& m);

// Numerical kernel dimension of a 3x3 matrix: pivots of a full-pivot
// elimination compared against `pivot_tol`.
int kernel_dim(const Mat3& m, double pivot_tol);

// Orthonormal basis of the numerical kernel. If the kernel found at
// `pivot_tol` has fewer than `min_dim` vectors, the smallest pivots are
// treated as zero until it does.
std::vector<Vec3> kernel_basis(const Mat3& m, double pivot_tol, int min_dim = 0);

}  // namespace lfmsemi
