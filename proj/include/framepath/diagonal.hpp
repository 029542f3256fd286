#pragma once

#include <vector>

#include "framepath/matrix.hpp"

namespace framepath {

/// Partition of {0..n-1} into the supports of the minimal projections of
/// {x}' ∩ D_n. Blocks are ordered by smallest index, indices sorted.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const noexcept { return static_cast<int>(blocks.size()); }
  int block_of(int index) const;
};

struct DiagonalProjection {
  std::vector<int> support;
  int n = 0;

  Matrix to_matrix(Field field) const;
  DiagonalProjection complement() const;
};

/// Diagonal conditional expectation: erases off-diagonal entries.
DiagonalVector expectation(const Matrix& x);

/// Connected components of the nonzero pattern |x[i,j]| > tol or |x[j,i]| > tol.
BlockPartition minimal_block_decomposition(const Matrix& x, double tol);

/// Number of minimal blocks; 1 means {x}' ∩ D_n is trivial.
int relative_commutant_dimension(const Matrix& p, double tol);

struct BlockTrace {
  cplx trace;  // sum of d over the block
  int rank;    // rank of p compressed to the block
};

/// Per-block trace of d and rank of the compression f_j p f_j.
std::vector<BlockTrace> block_trace_profile(const DiagonalVector& d, const Matrix& p,
                                            const BlockPartition& part,
                                            const ToleranceConfig& cfg = {});

}  // namespace framepath
