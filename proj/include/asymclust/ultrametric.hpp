#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asymclust/matrix.hpp"

namespace asymclust {

// Symmetric matrix with zero diagonal, positive off-diagonal and the strong
// triangle inequality u(i,j) <= max(u(i,k), u(k,j)). Instances produced by
// the clustering methods satisfy this by construction; instances built from
// external data are checked where it matters (see ultrametric_violation).
struct UltrametricMatrix {
  std::vector<std::string> labels;
  Matrix values;

  std::size_t size() const noexcept { return labels.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values(i, j); }

  friend bool operator==(const UltrametricMatrix&, const UltrametricMatrix&) = default;
};

struct UltrametricViolation {
  enum class Kind { NotSquare, NonZeroDiagonal, NonPositive, Asymmetric, StrongTriangle };
  Kind kind;
  // (i, j, k) for StrongTriangle; (i, j, j) for pairwise conditions.
  std::array<std::size_t, 3> index{};
  std::string describe() const;
};

// First violation in (i, j, k) lexicographic order, or nullopt.
std::optional<UltrametricViolation> ultrametric_violation(const Matrix& m);

}  // namespace asymclust
