#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "peerrate/survey.hpp"

namespace peerrate {

enum class WeightMethod { Degree, Eigenfactor };

std::string_view to_string(WeightMethod method) noexcept;

inline constexpr double kWeightSumTolerance = 1e-9;

/// Nonnegative per-student weights summing to one.
class WeightVector {
 public:
  /// Throws InvalidArgument on a negative/non-finite weight or when the sum
  /// is off by more than kWeightSumTolerance.
  WeightVector(std::vector<double> weights, WeightMethod method);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](std::size_t j) const { return weights_[j]; }
  WeightMethod method() const noexcept { return method_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
  WeightMethod method_;
};

/// Convex combination sum_j w_j r_j. The result is clamped to
/// [min r, max r], the exact value's range, so rounding never leaves it.
double weighted_rating(const RatingVector& ratings, const WeightVector& weights);

// Degree centrality ----------------------------------------------------------

/// w_j = (column sum j of D) / (total sum of D). Throws DegenerateNetwork
/// when every row of D is dangling.
WeightVector degree_weights(const NormalizedMatrix& normalized);

/// Throws DimensionMismatch on a length mismatch and InvalidArgument when
/// `weights` is not a degree weight vector.
double degree_weighted_rating(const RatingVector& ratings,
                              const WeightVector& weights);

}  // namespace peerrate
