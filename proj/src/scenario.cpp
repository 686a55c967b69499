#include "peerrate/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "peerrate/eigenfactor.hpp"

namespace peerrate {

Scenario::Scenario(int id_, SurveyInstance survey_, std::size_t biased_index_)
    : id(id_), survey(std::move(survey_)), biased_index(biased_index_) {
  if (survey.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "scenario " + std::to_string(id) +
                    " needs at least two students to form an unbiased mean");
  }
  if (biased_index >= survey.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "biased index " + std::to_string(biased_index) +
                    " is out of range for " + std::to_string(survey.size()) +
                    " students");
  }
}

namespace {

template <typename Compute>
MethodOutcome run_method(Compute&& compute, const RatingVector& ratings,
                         double unbiased_mean) {
  MethodOutcome outcome;
  try {
    WeightVector weights = compute();
    outcome.rating = weighted_rating(ratings, weights);
    outcome.error = std::abs(outcome.rating - unbiased_mean);
    outcome.weights = std::move(weights);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateNetwork &&
        e.code() != ErrorCode::NoConvergence) {
      throw;
    }
    outcome.failure = e.code();
    outcome.message = e.what();
  }
  return outcome;
}

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario,
                            const EigenfactorOptions& options) {
  options.validate();
  const RatingVector& r = scenario.survey.ratings;
  const std::size_t n = r.size();

  ScenarioResult result;
  result.id = scenario.id;
  result.arithmetic_mean = r.mean();
  double rest = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != scenario.biased_index) rest += r[j];
  }
  result.unbiased_mean = rest / static_cast<double>(n - 1);
  result.err_mean = std::abs(result.arithmetic_mean - result.unbiased_mean);

  const NormalizedMatrix d = normalize(scenario.survey.competence);
  result.degree = run_method([&] { return degree_weights(d); }, r,
                             result.unbiased_mean);
  result.eigenfactor = run_method(
      [&] {
        TransitionModel model(build_stochastic(d), options.alpha);
        return eigenfactor_weights(
            stationary_distribution(model, options.tol, options.max_iter), d);
      },
      r, result.unbiased_mean);
  return result;
}

ReductionSummary error_reduction_summary(std::span<const ScenarioResult> results) {
  if (results.empty()) {
    throw Error(ErrorCode::EmptyInput, "no scenario results to summarize");
  }
  ReductionSummary summary;
  double degree_sum = 0.0;
  double eigen_sum = 0.0;
  std::size_t degree_count = 0;
  std::size_t eigen_count = 0;

  for (const ScenarioResult& res : results) {
    ScenarioReduction red;
    red.id = res.id;
    red.division_by_zero = res.err_mean == 0.0;
    if (!red.division_by_zero) {
      if (res.degree.ok()) {
        red.degree_pct = 100.0 * (1.0 - res.degree.error / res.err_mean);
        degree_sum += *red.degree_pct;
        ++degree_count;
      }
      if (res.eigenfactor.ok()) {
        red.eigenfactor_pct = 100.0 * (1.0 - res.eigenfactor.error / res.err_mean);
        eigen_sum += *red.eigenfactor_pct;
        ++eigen_count;
      }
    }
    if (res.degree.ok() && res.eigenfactor.ok()) {
      const double ed = res.degree.error;
      const double ee = res.eigenfactor.error;
      red.winner = ee < ed ? Winner::Eigenfactor
                           : (ed < ee ? Winner::Degree : Winner::Tie);
      if (ee > ed) summary.eigenfactor_never_worse = false;
    }
    summary.scenarios.push_back(red);
  }
  if (degree_count > 0) {
    summary.mean_degree_pct = degree_sum / static_cast<double>(degree_count);
  }
  if (eigen_count > 0) {
    summary.mean_eigenfactor_pct = eigen_sum / static_cast<double>(eigen_count);
  }
  return summary;
}

RatingVector inject_bias(const RatingVector& ratings, std::size_t index,
                         double biased_value) {
  if (index >= ratings.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(index) + " is out of range for " +
                    std::to_string(ratings.size()) + " ratings");
  }
  std::vector<double> values(ratings.values().begin(), ratings.values().end());
  values[index] = biased_value;
  return RatingVector(std::move(values), ratings.scale());
}

std::vector<ScenarioResult> run_scenarios(const ScenarioSet& set,
                                          const EigenfactorOptions& options) {
  std::vector<ScenarioResult> results;
  results.reserve(set.scenarios.size());
  for (const Scenario& s : set.scenarios) {
    results.push_back(run_scenario(s, options));
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const ScenarioResult& a, const ScenarioResult& b) {
                     return a.id < b.id;
                   });
  return results;
}

}  // namespace peerrate
