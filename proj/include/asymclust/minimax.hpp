#pragma once

#include "asymclust/matrix.hpp"

namespace asymclust {

// Directed minimax chain costs: entry (i,j) is the minimum, over all chains
// from i to j, of the largest link dissimilarity along the chain. This is the
// (min, max) semiring closure of the input, computed by a Floyd-Warshall
// sweep in O(n^3) time and O(n^2) space.
//
// The input must be square with zero diagonal and positive finite entries
// elsewhere; anything else throws Error(InvalidMatrix).
Matrix minimax_closure(const Matrix& dissim);

// Single-threaded reference sweep. minimax_closure must agree with it exactly.
Matrix minimax_closure_serial(const Matrix& dissim);

// Row-parallel sweep (OpenMP when enabled, otherwise identical to serial).
Matrix minimax_closure_parallel(const Matrix& dissim);

// Entry (i,j) becomes max(m(i,j), m(j,i)).
Matrix pointwise_max_transpose(const Matrix& m);

}  // namespace asymclust
