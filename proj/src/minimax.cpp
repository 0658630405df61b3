#include "asymclust/minimax.hpp"

#include <algorithm>
#include <cstddef>

#include "asymclust/error.hpp"
#include "asymclust/network.hpp"

namespace asymclust {

namespace {

void require_valid(const Matrix& dissim) {
  try {
    validate_dissimilarity(dissim);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidMatrix, e.what(), e.row(), e.col());
  }
}

// During sweep k neither row k nor column k changes (u(k,k) = 0 makes the
// update a no-op there), so rows other than k can be relaxed independently.
inline void relax_row(double* __restrict row_i, const double* __restrict row_k, double via_k,
                      std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) row_i[j] = std::min(row_i[j], std::max(via_k, row_k[j]));
}

}  // namespace

Matrix minimax_closure_serial(const Matrix& dissim) {
  require_valid(dissim);
  Matrix u = dissim;
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        u(i, j) = std::min(u(i, j), std::max(u(i, k), u(k, j)));
      }
    }
  }
  return u;
}

Matrix minimax_closure_parallel(const Matrix& dissim) {
  require_valid(dissim);
  Matrix u = dissim;
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double* row_k = u.row(static_cast<std::size_t>(k)).data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 64)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (i == k) continue;
      auto row_i = u.row(static_cast<std::size_t>(i));
      relax_row(row_i.data(), row_k, row_i[static_cast<std::size_t>(k)],
                static_cast<std::size_t>(n));
    }
  }
  return u;
}

Matrix minimax_closure(const Matrix& dissim) { return minimax_closure_parallel(dissim); }

Matrix pointwise_max_transpose(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::max(m(i, j), m(j, i));
  return out;
}

}  // namespace asymclust
