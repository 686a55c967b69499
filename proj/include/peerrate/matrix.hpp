#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace peerrate {

/// Dense row-major n x n matrix of doubles. Class sizes are small, so no
/// sparse storage.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, double fill = 0.0)
      : order_(order), data_(order * order, fill) {}

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * order_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * order_, order_};
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * order_, order_};
  }

  double row_sum(std::size_t i) const;
  double column_sum(std::size_t j) const;
  double total() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

}  // namespace peerrate
