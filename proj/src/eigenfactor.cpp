#include "peerrate/eigenfactor.hpp"

#include <cmath>
#include <string>

#include "peerrate/error.hpp"

namespace peerrate {

void EigenfactorOptions::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1)");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  }
  if (max_iter < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
  }
}

StochasticMatrix build_stochastic(const NormalizedMatrix& normalized) {
  const std::size_t n = normalized.order();
  SquareMatrix h = normalized.entries();
  const double uniform = 1.0 / static_cast<double>(n);
  for (std::size_t i : normalized.dangling()) {
    for (double& v : h.row(i)) v = uniform;
  }
  return StochasticMatrix(std::move(h));
}

TransitionModel::TransitionModel(StochasticMatrix stochastic, double alpha)
    : stochastic_(std::move(stochastic)), alpha_(alpha) {
  if (!(alpha_ >= 0.0 && alpha_ < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1)");
  }
  if (stochastic_.order() == 0) {
    throw Error(ErrorCode::EmptyInput, "transition model has order 0");
  }
}

std::vector<double> TransitionModel::step(std::span<const double> x) const {
  const std::size_t n = order();
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(x.size()) + " entries, expected " +
                    std::to_string(n));
  }
  double mass = 0.0;
  for (double xi : x) mass += xi;
  const double teleport = (1.0 - alpha_) * mass / static_cast<double>(n);

  std::vector<double> next(n, 0.0);
  const SquareMatrix& h = stochastic_.entries();
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = alpha_ * x[i];
    const auto row = h.row(i);
    for (std::size_t j = 0; j < n; ++j) next[j] += xi * row[j];
  }
  for (double& v : next) v += teleport;
  return next;
}

SquareMatrix TransitionModel::materialize_p() const {
  const std::size_t n = order();
  const double teleport = (1.0 - alpha_) / static_cast<double>(n);
  SquareMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = alpha_ * stochastic_(j, i) + teleport;
  return p;
}

InfluenceVector stationary_distribution(const TransitionModel& model,
                                        double tol, int max_iter) {
  EigenfactorOptions{model.alpha(), tol, max_iter}.validate();
  const std::size_t n = model.order();
  InfluenceVector out;
  out.x.assign(n, 1.0 / static_cast<double>(n));
  out.residual = 0.0;

  for (int k = 1; k <= max_iter; ++k) {
    std::vector<double> next = model.step(out.x);
    double mass = 0.0;
    for (double v : next) mass += v;
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= mass;
      change += std::abs(next[i] - out.x[i]);
    }
    out.x = std::move(next);
    out.iterations = k;
    out.residual = change;
    if (change <= tol) return out;
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not reach tol " + std::to_string(tol) +
                  " within " + std::to_string(max_iter) +
                  " iterations (last L1 change " +
                  std::to_string(out.residual) + ")");
}

WeightVector eigenfactor_weights(const InfluenceVector& influence,
                                 const NormalizedMatrix& normalized) {
  const std::size_t n = normalized.order();
  if (influence.x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "influence vector has " + std::to_string(influence.x.size()) +
                    " entries, expected " + std::to_string(n));
  }
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = influence.x[i];
    for (std::size_t j = 0; j < n; ++j) v[j] += xi * normalized(i, j);
  }
  double total = 0.0;
  for (double vj : v) total += vj;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::DegenerateNetwork,
                "no student declares any other competent");
  }
  for (double& vj : v) vj /= total;
  return WeightVector(std::move(v), WeightMethod::Eigenfactor);
}

double eigenfactor_weighted_rating(const RatingVector& ratings,
                                   const WeightVector& weights) {
  if (weights.method() != WeightMethod::Eigenfactor) {
    throw Error(ErrorCode::InvalidArgument, "expected eigenfactor weights");
  }
  return weighted_rating(ratings, weights);
}

}  // namespace peerrate
