#include "asymclust/ultrametric.hpp"

#include <algorithm>
#include <cmath>

namespace asymclust {

std::string UltrametricViolation::describe() const {
  const auto [i, j, k] = index;
  auto pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  switch (kind) {
    case Kind::NotSquare: return "matrix is not square";
    case Kind::NonZeroDiagonal: return "u" + pair + " != 0 on the diagonal";
    case Kind::NonPositive: return "u" + pair + " is not a positive finite value";
    case Kind::Asymmetric: return "u" + pair + " != u(" + std::to_string(j) + "," +
                                  std::to_string(i) + ")";
    case Kind::StrongTriangle:
      return "u" + pair + " > max(u(" + std::to_string(i) + "," + std::to_string(k) + "), u(" +
             std::to_string(k) + "," + std::to_string(j) + "))";
  }
  return "unknown violation";
}

std::optional<UltrametricViolation> ultrametric_violation(const Matrix& m) {
  using Kind = UltrametricViolation::Kind;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (i == j) {
        if (v != 0.0) return UltrametricViolation{Kind::NonZeroDiagonal, {i, j, j}};
        continue;
      }
      if (!(v > 0.0) || !std::isfinite(v))
        return UltrametricViolation{Kind::NonPositive, {i, j, j}};
      if (v != m(j, i)) return UltrametricViolation{Kind::Asymmetric, {i, j, j}};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m(i, j) > std::max(m(i, k), m(k, j)))
          return UltrametricViolation{Kind::StrongTriangle, {i, j, k}};
  return std::nullopt;
}

}  // namespace asymclust
