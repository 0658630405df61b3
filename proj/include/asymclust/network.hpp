#pragma once

#include <string>
#include <vector>

#include "asymclust/error.hpp"
#include "asymclust/matrix.hpp"

namespace asymclust {

// A finite asymmetric dissimilarity network. The diagonal is zero, every
// off-diagonal entry is positive and finite, and the matrix need not be
// symmetric nor satisfy any triangle inequality. Immutable once built.
class Network {
 public:
  // Validates and throws Error on the first violation (row-major scan).
  Network(std::vector<std::string> labels, Matrix dissim);
  Network(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Matrix& dissim() const noexcept { return dissim_; }
  std::size_t size() const noexcept { return labels_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return dissim_(i, j); }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix dissim_;
};

Network new_network(std::vector<std::string> labels,
                    const std::vector<std::vector<double>>& rows);

// Throws with the violation; used by Network and by anything that accepts a
// bare matrix with network semantics.
void validate_dissimilarity(const Matrix& m);
void validate_labels(const std::vector<std::string>& labels, std::size_t n);

// Entry (i,j) becomes max(A(i,j), A(j,i)).
Network symmetrize_max(const Network& net);

bool is_symmetric(const Matrix& m) noexcept;
bool is_symmetric(const Network& net) noexcept;

// Labels "0", "1", ... for matrices that arrive without names.
std::vector<std::string> index_labels(std::size_t n);

}  // namespace asymclust
