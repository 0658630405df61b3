#include "asymclust/network.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace asymclust {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::NonSquare,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(n),
                  i);
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void validate_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    throw Error(ErrorCode::NonSquare, std::to_string(labels.size()) + " labels for a " +
                                          std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "'", i);
    }
  }
}

void validate_dissimilarity(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::NonSquare, "empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteEntry, "entry " + at(i, j), i, j);
      if (v < 0.0) throw Error(ErrorCode::NegativeEntry, "entry " + at(i, j), i, j);
      if (i == j && v != 0.0) throw Error(ErrorCode::NonZeroDiagonal, "entry " + at(i, j), i, j);
      if (i != j && v == 0.0) throw Error(ErrorCode::ZeroOffDiagonal, "entry " + at(i, j), i, j);
    }
  }
}

Network::Network(std::vector<std::string> labels, Matrix dissim)
    : labels_(std::move(labels)), dissim_(std::move(dissim)) {
  validate_labels(labels_, dissim_.size());
  validate_dissimilarity(dissim_);
}

Network::Network(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows)
    : Network(std::move(labels), Matrix::from_rows(rows)) {}

Network new_network(std::vector<std::string> labels,
                    const std::vector<std::vector<double>>& rows) {
  return Network(std::move(labels), rows);
}

Network symmetrize_max(const Network& net) {
  const std::size_t n = net.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::max(net(i, j), net(j, i));
  return Network(net.labels(), std::move(out));
}

bool is_symmetric(const Matrix& m) noexcept {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_symmetric(const Network& net) noexcept { return is_symmetric(net.dissim()); }

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace asymclust
