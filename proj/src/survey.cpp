#include "peerrate/survey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "peerrate/error.hpp"

namespace peerrate {

namespace {

std::string index_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

RatingVector::RatingVector(std::vector<double> values, LikertScale scale,
                           bool strict_likert)
    : values_(std::move(values)), scale_(scale) {
  if (!(scale_.min <= scale_.max) || !std::isfinite(scale_.min) ||
      !std::isfinite(scale_.max)) {
    throw Error(ErrorCode::InvalidArgument, "scale must satisfy min <= max");
  }
  if (values_.empty()) {
    throw Error(ErrorCode::EmptyInput, "rating vector is empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!scale_.contains(v)) {
      throw Error(ErrorCode::ScaleViolation,
                  "rating " + std::to_string(i) + " = " + std::to_string(v) +
                      " lies outside [" + std::to_string(scale_.min) + ", " +
                      std::to_string(scale_.max) + "]");
    }
    if (strict_likert && std::trunc(v) != v) {
      throw Error(ErrorCode::ScaleViolation,
                  "rating " + std::to_string(i) + " = " + std::to_string(v) +
                      " is not a whole Likert point");
    }
  }
}

double RatingVector::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double RatingVector::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

double RatingVector::mean() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

CompetenceMatrix::CompetenceMatrix(const std::vector<std::vector<int>>& rows)
    : order_(rows.size()) {
  entries_.reserve(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i) {
    if (rows[i].size() != order_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "competence matrix is not square: row " + std::to_string(i) +
                      " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(order_));
    }
    for (std::size_t j = 0; j < order_; ++j) {
      const int c = rows[i][j];
      if (c != 0 && c != 1) {
        throw Error(ErrorCode::NonBinaryEntry,
                    "competence entry " + index_text(i, j) + " is not 0 or 1");
      }
      if (i == j && c != 0) {
        throw Error(ErrorCode::NonZeroDiagonal,
                    "competence entry " + index_text(i, i) +
                        " is a self-valuation");
      }
      entries_.push_back(static_cast<std::uint8_t>(c));
    }
  }
}

int CompetenceMatrix::row_count(std::size_t i) const {
  int count = 0;
  for (std::size_t j = 0; j < order_; ++j) count += (*this)(i, j);
  return count;
}

int CompetenceMatrix::column_count(std::size_t j) const {
  int count = 0;
  for (std::size_t i = 0; i < order_; ++i) count += (*this)(i, j);
  return count;
}

std::vector<std::vector<int>> CompetenceMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

SurveyInstance::SurveyInstance(std::string label_, RatingVector ratings_,
                               CompetenceMatrix competence_,
                               std::vector<std::size_t> coerced_diagonal_)
    : label(std::move(label_)),
      ratings(std::move(ratings_)),
      competence(std::move(competence_)),
      coerced_diagonal(std::move(coerced_diagonal_)) {
  if (ratings.size() != competence.order()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(ratings.size()) + " ratings but a " +
                    std::to_string(competence.order()) + "x" +
                    std::to_string(competence.order()) + " competence matrix");
  }
}

SurveyInstance validate_survey(std::span<const double> raw_ratings,
                               const std::vector<std::vector<double>>& raw_matrix,
                               const ValidationOptions& options,
                               std::string label) {
  const std::size_t n = raw_matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw_matrix[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "competence matrix is not square: row " + std::to_string(i) +
                      " has " + std::to_string(raw_matrix[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
  }
  if (raw_ratings.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(raw_ratings.size()) + " ratings but a " +
                    std::to_string(n) + "x" + std::to_string(n) +
                    " competence matrix");
  }
  if (n == 0) throw Error(ErrorCode::EmptyInput, "survey has no students");

  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  std::vector<std::size_t> coerced;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double c = raw_matrix[i][j];
      if (c != 0.0 && c != 1.0) {
        throw Error(ErrorCode::NonBinaryEntry,
                    "competence entry " + index_text(i, j) + " is not 0 or 1");
      }
      rows[i][j] = c == 1.0 ? 1 : 0;
    }
    if (rows[i][i] != 0) {
      if (options.diagonal == DiagonalPolicy::Reject) {
        throw Error(ErrorCode::NonZeroDiagonal,
                    "competence entry " + index_text(i, i) +
                        " is a self-valuation");
      }
      rows[i][i] = 0;
      coerced.push_back(i);
    }
  }

  RatingVector ratings(std::vector<double>(raw_ratings.begin(), raw_ratings.end()),
                       options.scale, options.strict_likert);
  return SurveyInstance(std::move(label), std::move(ratings),
                        CompetenceMatrix(rows), std::move(coerced));
}

SurveyInstance validate_survey(const SurveyInstance& survey,
                               const ValidationOptions& options) {
  ValidationOptions same = options;
  same.scale = survey.ratings.scale();
  std::vector<std::vector<double>> raw(survey.size(),
                                       std::vector<double>(survey.size()));
  for (std::size_t i = 0; i < survey.size(); ++i)
    for (std::size_t j = 0; j < survey.size(); ++j)
      raw[i][j] = survey.competence(i, j);
  SurveyInstance again =
      validate_survey(survey.ratings.values(), raw, same, survey.label);
  // Coercions already applied to the original input stay on record.
  again.coerced_diagonal = survey.coerced_diagonal;
  return again;
}

NormalizedMatrix normalize(const CompetenceMatrix& competence) {
  const std::size_t n = competence.order();
  NormalizedMatrix d;
  d.entries_ = SquareMatrix(n, 0.0);
  d.row_sums_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = competence.row_count(i);
    d.row_sums_[i] = s;
    if (s == 0) {
      d.dangling_.push_back(i);
      continue;
    }
    const double share = 1.0 / static_cast<double>(s);
    for (std::size_t j = 0; j < n; ++j) {
      if (competence(i, j) != 0) d.entries_(i, j) = share;
    }
  }
  return d;
}

}  // namespace peerrate
