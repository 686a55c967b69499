#pragma once

// Spread of Likert ratings around each instructor's mode: counts at absolute
// deviation exactly 2 and at 3 or more, and corpus-level percentages.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "peerrate/survey.hpp"

namespace peerrate {

enum class ModeTieBreak { Smallest, Largest };

inline constexpr std::size_t kDefaultMinRatings = 5;

/// Most frequent value. Throws EmptyInput.
int mode_of(std::span<const int> ratings,
            ModeTieBreak tie_break = ModeTieBreak::Smallest);

struct InstructorRecord {
  std::string label;
  std::vector<int> ratings;
};

struct DispersionRow {
  std::string label;
  std::size_t n = 0;
  int mode = 0;
  std::size_t dev2 = 0;
  std::size_t dev3plus = 0;

  friend bool operator==(const DispersionRow&, const DispersionRow&) = default;
};

/// Throws EmptyInput for no ratings and ScaleViolation for a rating that is
/// not an integer on `scale`.
DispersionRow dispersion_row(const InstructorRecord& record,
                             ModeTieBreak tie_break = ModeTieBreak::Smallest,
                             LikertScale scale = {});

/// Checks a pre-counted row: n >= 1, mode on the scale, dev2 + dev3plus <= n.
/// Throws MalformedInput.
DispersionRow precounted_row(std::string label, std::size_t n, int mode,
                             std::size_t dev2, std::size_t dev3plus,
                             LikertScale scale = {});

struct DispersionAggregate {
  std::size_t total_n = 0;
  std::size_t total_dev2 = 0;
  std::size_t total_dev3plus = 0;
  double pct_dev2 = 0.0;
  double pct_dev3plus = 0.0;
  double pct_dev2plus = 0.0;
};

/// Throws EmptyInput for no rows or total_n == 0.
DispersionAggregate aggregate(std::span<const DispersionRow> rows);

struct ExcludedInstructor {
  std::string label;
  std::size_t n = 0;
};

struct DispersionTable {
  std::vector<DispersionRow> rows;
  std::vector<ExcludedInstructor> excluded;
  DispersionAggregate totals;
};

/// Drops rows with fewer than `min_n` ratings, then aggregates the rest.
DispersionTable build_dispersion_table(std::vector<DispersionRow> rows,
                                       std::size_t min_n = kDefaultMinRatings);

}  // namespace peerrate
