#pragma once

// Survey domain types: one instructor's rating vector, the student-to-student
// competence matrix, and the row-normalized matrix both weighting methods
// start from.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "peerrate/matrix.hpp"

namespace peerrate {

struct LikertScale {
  double min = 1.0;
  double max = 5.0;

  bool contains(double v) const noexcept { return v >= min && v <= max; }
  friend bool operator==(const LikertScale&, const LikertScale&) = default;
};

enum class DiagonalPolicy { Reject, Coerce };

struct ValidationOptions {
  LikertScale scale{};
  DiagonalPolicy diagonal = DiagonalPolicy::Coerce;
  // Ratings must be whole numbers when set.
  bool strict_likert = false;
};

/// Ratings received by one instructor, one per responding student.
class RatingVector {
 public:
  /// Throws EmptyInput for no values, ScaleViolation for a value outside
  /// `scale` (or a non-integer when `strict_likert`).
  explicit RatingVector(std::vector<double> values, LikertScale scale = {},
                        bool strict_likert = false);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  const LikertScale& scale() const noexcept { return scale_; }

  double min() const;
  double max() const;
  double mean() const;

  friend bool operator==(const RatingVector&, const RatingVector&) = default;

 private:
  std::vector<double> values_;
  LikertScale scale_;
};

/// Binary matrix, entry (i, j) = 1 when student i judges student j competent
/// to rate the teacher. The diagonal is always zero.
class CompetenceMatrix {
 public:
  /// Strict construction: square, entries in {0, 1}, zero diagonal.
  explicit CompetenceMatrix(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return order_; }
  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }
  /// Number of students i declares competent.
  int row_count(std::size_t i) const;
  int column_count(std::size_t j) const;

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const CompetenceMatrix&,
                         const CompetenceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> entries_;
};

struct SurveyInstance {
  SurveyInstance(std::string label, RatingVector ratings,
                 CompetenceMatrix competence,
                 std::vector<std::size_t> coerced_diagonal = {});

  std::size_t size() const noexcept { return ratings.size(); }

  std::string label;
  RatingVector ratings;
  CompetenceMatrix competence;
  // Rows whose nonzero self-valuation was zeroed under DiagonalPolicy::Coerce.
  std::vector<std::size_t> coerced_diagonal;

  friend bool operator==(const SurveyInstance&,
                         const SurveyInstance&) = default;
};

/// Validates raw survey input. Entries outside {0, 1} are always rejected;
/// a nonzero diagonal is rejected or zeroed according to the policy.
SurveyInstance validate_survey(std::span<const double> raw_ratings,
                               const std::vector<std::vector<double>>& raw_matrix,
                               const ValidationOptions& options = {},
                               std::string label = {});

/// Re-validates an existing instance. Returns an equal instance.
SurveyInstance validate_survey(const SurveyInstance& survey,
                               const ValidationOptions& options = {});

/// Competence matrix with every non-dangling row divided by its row sum.
class NormalizedMatrix {
 public:
  std::size_t order() const noexcept { return entries_.order(); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }
  const SquareMatrix& entries() const noexcept { return entries_; }
  std::span<const int> row_sums() const noexcept { return row_sums_; }
  /// Sorted indices of rows with a zero row sum.
  std::span<const std::size_t> dangling() const noexcept { return dangling_; }
  bool is_dangling(std::size_t i) const { return row_sums_[i] == 0; }

  double column_sum(std::size_t j) const { return entries_.column_sum(j); }
  /// Equals the number of non-dangling rows up to rounding.
  double total() const { return entries_.total(); }

 private:
  friend NormalizedMatrix normalize(const CompetenceMatrix& competence);
  NormalizedMatrix() = default;

  SquareMatrix entries_;
  std::vector<int> row_sums_;
  std::vector<std::size_t> dangling_;
};

NormalizedMatrix normalize(const CompetenceMatrix& competence);

}  // namespace peerrate
