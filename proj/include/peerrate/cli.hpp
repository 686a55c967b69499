#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "peerrate/dispersion.hpp"
#include "peerrate/eigenfactor.hpp"
#include "peerrate/survey.hpp"

namespace peerrate::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitNoConvergence = 4;

struct RunConfig {
  std::string command;
  std::string survey_path;
  std::string ratings_csv_path;
  std::string competence_csv_path;
  std::string scenario_path;
  std::vector<double> scale{1.0, 5.0};
  EigenfactorOptions eigen{};
  DiagonalPolicy diagonal_policy = DiagonalPolicy::Coerce;
  bool strict_likert = false;
  std::size_t min_n = kDefaultMinRatings;
  ModeTieBreak mode_tiebreak = ModeTieBreak::Smallest;
  std::string output_path;  // empty: stdout

  /// Throws InvalidArgument for out-of-range numeric settings.
  void validate() const;
  nlohmann::json to_json() const;
};

int cmd_rate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dispersion(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scenarios(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Reports go to `out` (or --output), messages
/// to `err`. Nothing is written to the report stream on failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace peerrate::cli
