#include "peerrate/rating.hpp"

namespace peerrate {

WeightedRatingReport evaluate_survey(const SurveyInstance& survey,
                                     const EigenfactorOptions& options) {
  options.validate();
  const NormalizedMatrix d = normalize(survey.competence);

  WeightVector w = degree_weights(d);
  const double r_d = degree_weighted_rating(survey.ratings, w);

  TransitionModel model(build_stochastic(d), options.alpha);
  InfluenceVector x = stationary_distribution(model, options.tol, options.max_iter);
  WeightVector v = eigenfactor_weights(x, d);
  const double r_e = eigenfactor_weighted_rating(survey.ratings, v);

  return WeightedRatingReport{
      .label = survey.label,
      .n = survey.size(),
      .arithmetic_mean = survey.ratings.mean(),
      .degree = {std::move(w), r_d},
      .eigenfactor = {options.alpha, std::move(v), std::move(x), r_e},
      .coerced_diagonal = survey.coerced_diagonal,
  };
}

}  // namespace peerrate
