#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace asymclust {

// Dense row-major square matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) noexcept {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }

  std::span<const double> data() const noexcept { return data_; }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace asymclust
