#include "peerrate/matrix.hpp"

namespace peerrate {

double SquareMatrix::row_sum(std::size_t i) const {
  double sum = 0.0;
  for (double v : row(i)) sum += v;
  return sum;
}

double SquareMatrix::column_sum(std::size_t j) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, j);
  return sum;
}

double SquareMatrix::total() const {
  // Row by row so the result matches summing row sums in order.
  double sum = 0.0;
  for (std::size_t i = 0; i < order_; ++i) sum += row_sum(i);
  return sum;
}

}  // namespace peerrate
