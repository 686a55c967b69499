#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "peerrate/eigenfactor.hpp"
#include "peerrate/survey.hpp"
#include "peerrate/weights.hpp"

namespace peerrate {

struct DegreeResult {
  WeightVector weights;
  double weighted_rating;
};

struct EigenfactorResult {
  double alpha;
  WeightVector weights;
  InfluenceVector influence;
  double weighted_rating;
};

/// Both weighted ratings of one survey next to the plain mean.
struct WeightedRatingReport {
  std::string label;
  std::size_t n = 0;
  double arithmetic_mean = 0.0;
  DegreeResult degree;
  EigenfactorResult eigenfactor;
  std::vector<std::size_t> coerced_diagonal;
};

/// Runs the degree and eigenfactor pipelines. Propagates DegenerateNetwork
/// and NoConvergence.
WeightedRatingReport evaluate_survey(const SurveyInstance& survey,
                                     const EigenfactorOptions& options = {});

}  // namespace peerrate
