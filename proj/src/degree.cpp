#include <algorithm>
#include <cmath>
#include <string>

#include "peerrate/error.hpp"
#include "peerrate/weights.hpp"

namespace peerrate {

std::string_view to_string(WeightMethod method) noexcept {
  return method == WeightMethod::Degree ? "degree" : "eigenfactor";
}

WeightVector::WeightVector(std::vector<double> weights, WeightMethod method)
    : weights_(std::move(weights)), method_(method) {
  if (weights_.empty()) {
    throw Error(ErrorCode::EmptyInput, "weight vector is empty");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!std::isfinite(weights_[j]) || weights_[j] < 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight " + std::to_string(j) + " is negative or not finite");
    }
    sum += weights_[j];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::InvalidArgument,
                "weights sum to " + std::to_string(sum) + ", not 1");
  }
}

double weighted_rating(const RatingVector& ratings, const WeightVector& weights) {
  if (ratings.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(ratings.size()) + " ratings but " +
                    std::to_string(weights.size()) + " weights");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < ratings.size(); ++j) {
    sum += weights[j] * ratings[j];
  }
  return std::clamp(sum, ratings.min(), ratings.max());
}

WeightVector degree_weights(const NormalizedMatrix& normalized) {
  const double total = normalized.total();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::DegenerateNetwork,
                "no student declares any other competent");
  }
  std::vector<double> w(normalized.order());
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = normalized.column_sum(j) / total;
  }
  return WeightVector(std::move(w), WeightMethod::Degree);
}

double degree_weighted_rating(const RatingVector& ratings,
                              const WeightVector& weights) {
  if (weights.method() != WeightMethod::Degree) {
    throw Error(ErrorCode::InvalidArgument, "expected degree weights");
  }
  return weighted_rating(ratings, weights);
}

}  // namespace peerrate
