#pragma once

// Eigenfactor centrality: dangling rows of D become uniform rows (H), the
// chain is mixed with uniform teleportation, and its stationary distribution
// (the influence vector) weights the columns of D.

#include <cstddef>
#include <span>
#include <vector>

#include "peerrate/matrix.hpp"
#include "peerrate/survey.hpp"
#include "peerrate/weights.hpp"

namespace peerrate {

inline constexpr double kDefaultAlpha = 0.85;
inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kDefaultMaxIterations = 1000;

struct EigenfactorOptions {
  double alpha = kDefaultAlpha;
  double tol = kDefaultTolerance;
  int max_iter = kDefaultMaxIterations;

  /// Throws InvalidArgument unless 0 <= alpha < 1, tol > 0, max_iter >= 1.
  void validate() const;
};

/// Row-stochastic matrix: D with dangling rows replaced by (1/n, ..., 1/n).
class StochasticMatrix {
 public:
  std::size_t order() const noexcept { return entries_.order(); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }
  const SquareMatrix& entries() const noexcept { return entries_; }

 private:
  friend StochasticMatrix build_stochastic(const NormalizedMatrix& normalized);
  explicit StochasticMatrix(SquareMatrix entries)
      : entries_(std::move(entries)) {}

  SquareMatrix entries_;
};

StochasticMatrix build_stochastic(const NormalizedMatrix& normalized);

/// P = alpha * H^t + (1 - alpha) * T with T the uniform 1/n matrix. P is
/// column-stochastic and is never formed during iteration.
class TransitionModel {
 public:
  TransitionModel(StochasticMatrix stochastic, double alpha);

  std::size_t order() const noexcept { return stochastic_.order(); }
  double alpha() const noexcept { return alpha_; }
  const StochasticMatrix& stochastic() const noexcept { return stochastic_; }

  /// One chain transition: returns P x, i.e. alpha * x H + (1 - alpha)/n *
  /// sum(x) in row form.
  std::vector<double> step(std::span<const double> x) const;

  /// Dense P, for tests and debugging.
  SquareMatrix materialize_p() const;

 private:
  StochasticMatrix stochastic_;
  double alpha_;
};

struct InfluenceVector {
  std::vector<double> x;
  int iterations = 0;
  // L1 change of the last iteration.
  double residual = 0.0;
};

/// Power iteration from the uniform vector, renormalized each step, stopping
/// once the L1 change is <= tol. Throws NoConvergence after max_iter steps.
InfluenceVector stationary_distribution(const TransitionModel& model,
                                        double tol = kDefaultTolerance,
                                        int max_iter = kDefaultMaxIterations);

/// v_j = sum_i x_i d_ij / sum_ij x_i d_ij. Throws DegenerateNetwork when the
/// denominator is zero (D entirely zero).
WeightVector eigenfactor_weights(const InfluenceVector& influence,
                                 const NormalizedMatrix& normalized);

double eigenfactor_weighted_rating(const RatingVector& ratings,
                                   const WeightVector& weights);

}  // namespace peerrate
