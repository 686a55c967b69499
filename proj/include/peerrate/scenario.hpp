#pragma once

// Biased-rating experiment: a fixed rating vector with one declared biased
// rating, evaluated against several competence matrices. Errors are measured
// against the mean of the other n - 1 ratings.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peerrate/eigenfactor.hpp"
#include "peerrate/error.hpp"
#include "peerrate/survey.hpp"
#include "peerrate/weights.hpp"

namespace peerrate {

struct Scenario {
  /// Throws IndexOutOfRange unless biased_index < n, InvalidArgument for n < 2.
  Scenario(int id, SurveyInstance survey, std::size_t biased_index);

  int id;
  SurveyInstance survey;
  std::size_t biased_index;
};

/// One weighting method's outcome. Either `weights` is set, or `failure`
/// holds the error that stopped the method.
struct MethodOutcome {
  std::optional<WeightVector> weights;
  double rating = 0.0;
  double error = 0.0;
  std::optional<ErrorCode> failure;
  std::string message;

  bool ok() const noexcept { return !failure.has_value(); }
};

struct ScenarioResult {
  int id = 0;
  double arithmetic_mean = 0.0;
  double unbiased_mean = 0.0;
  double err_mean = 0.0;
  MethodOutcome degree;
  MethodOutcome eigenfactor;
};

/// A DegenerateNetwork or NoConvergence in one method is recorded in its
/// outcome; the other method still runs.
ScenarioResult run_scenario(const Scenario& scenario,
                            const EigenfactorOptions& options = {});

enum class Winner { Degree, Eigenfactor, Tie };

struct ScenarioReduction {
  int id = 0;
  std::optional<double> degree_pct;
  std::optional<double> eigenfactor_pct;
  // err_mean == 0: the scenario is excluded from the means.
  bool division_by_zero = false;
  std::optional<Winner> winner;
};

struct ReductionSummary {
  std::vector<ScenarioReduction> scenarios;
  std::optional<double> mean_degree_pct;
  std::optional<double> mean_eigenfactor_pct;
  // err_e <= err_d in every scenario where both methods succeeded.
  bool eigenfactor_never_worse = true;
};

/// Percentage reduction 100 * (1 - err_method / err_mean) per scenario and on
/// average. Throws EmptyInput for no results.
ReductionSummary error_reduction_summary(std::span<const ScenarioResult> results);

/// Copy of `ratings` with one entry replaced. Throws IndexOutOfRange and
/// ScaleViolation.
RatingVector inject_bias(const RatingVector& ratings, std::size_t index,
                         double biased_value);

struct ScenarioSet {
  std::string label;
  std::vector<Scenario> scenarios;
};

/// Runs every scenario; results are ordered by scenario id.
std::vector<ScenarioResult> run_scenarios(const ScenarioSet& set,
                                          const EigenfactorOptions& options = {});

}  // namespace peerrate
