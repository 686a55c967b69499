#include "peerrate/dispersion.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "peerrate/error.hpp"

namespace peerrate {

int mode_of(std::span<const int> ratings, ModeTieBreak tie_break) {
  if (ratings.empty()) {
    throw Error(ErrorCode::EmptyInput, "mode of an empty rating list");
  }
  std::map<int, std::size_t> counts;
  for (int r : ratings) ++counts[r];

  // Ascending key order: strict > keeps the smallest tied value, >= the largest.
  int best = counts.begin()->first;
  std::size_t best_count = 0;
  for (const auto& [value, count] : counts) {
    const bool better = tie_break == ModeTieBreak::Smallest
                            ? count > best_count
                            : count >= best_count;
    if (better) {
      best = value;
      best_count = count;
    }
  }
  return best;
}

DispersionRow dispersion_row(const InstructorRecord& record,
                             ModeTieBreak tie_break, LikertScale scale) {
  if (record.ratings.empty()) {
    throw Error(ErrorCode::EmptyInput,
                "instructor '" + record.label + "' has no ratings");
  }
  for (int r : record.ratings) {
    if (!scale.contains(r)) {
      throw Error(ErrorCode::ScaleViolation,
                  "instructor '" + record.label + "' has rating " +
                      std::to_string(r) + " outside the scale");
    }
  }
  DispersionRow row;
  row.label = record.label;
  row.n = record.ratings.size();
  row.mode = mode_of(record.ratings, tie_break);
  for (int r : record.ratings) {
    const int deviation = std::abs(r - row.mode);
    if (deviation == 2) {
      ++row.dev2;
    } else if (deviation >= 3) {
      ++row.dev3plus;
    }
  }
  return row;
}

DispersionRow precounted_row(std::string label, std::size_t n, int mode,
                             std::size_t dev2, std::size_t dev3plus,
                             LikertScale scale) {
  if (n == 0) {
    throw Error(ErrorCode::MalformedInput, "row '" + label + "' has n = 0");
  }
  if (!scale.contains(mode)) {
    throw Error(ErrorCode::MalformedInput,
                "row '" + label + "' has mode " + std::to_string(mode) +
                    " outside the scale");
  }
  if (dev2 + dev3plus > n) {
    throw Error(ErrorCode::MalformedInput,
                "row '" + label + "' counts more deviated ratings than n");
  }
  return DispersionRow{std::move(label), n, mode, dev2, dev3plus};
}

DispersionAggregate aggregate(std::span<const DispersionRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyInput, "no dispersion rows to aggregate");
  }
  DispersionAggregate agg;
  for (const DispersionRow& row : rows) {
    agg.total_n += row.n;
    agg.total_dev2 += row.dev2;
    agg.total_dev3plus += row.dev3plus;
  }
  if (agg.total_n == 0) {
    throw Error(ErrorCode::EmptyInput, "dispersion rows hold no ratings");
  }
  const double total = static_cast<double>(agg.total_n);
  agg.pct_dev2 = 100.0 * static_cast<double>(agg.total_dev2) / total;
  agg.pct_dev3plus = 100.0 * static_cast<double>(agg.total_dev3plus) / total;
  agg.pct_dev2plus = agg.pct_dev2 + agg.pct_dev3plus;
  return agg;
}

DispersionTable build_dispersion_table(std::vector<DispersionRow> rows,
                                       std::size_t min_n) {
  DispersionTable table;
  for (DispersionRow& row : rows) {
    if (row.n < min_n) {
      table.excluded.push_back({row.label, row.n});
    } else {
      table.rows.push_back(std::move(row));
    }
  }
  table.totals = aggregate(table.rows);
  return table;
}

}  // namespace peerrate
