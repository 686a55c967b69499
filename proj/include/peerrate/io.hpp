#pragma once

// File formats: survey JSON, matrix/ratings CSV, dispersion CSV (long or
// pre-counted form), scenario JSON, and the JSON reports.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "peerrate/dispersion.hpp"
#include "peerrate/rating.hpp"
#include "peerrate/scenario.hpp"
#include "peerrate/survey.hpp"

namespace peerrate {

inline constexpr int kSchemaVersion = 1;

std::string read_text_file(const std::filesystem::path& path);

/// Splits one CSV record. Double-quoted fields may contain commas; "" inside
/// quotes is a literal quote.
std::vector<std::string> split_csv_line(const std::string& line);

// Survey --------------------------------------------------------------------

/// `{ "label", "scale": [min, max], "ratings": [...], "competence": [[...]] }`.
/// "label" and "scale" are optional; a scale in the file overrides
/// options.scale. A null competence cell counts as a blank answer (0).
SurveyInstance survey_from_json(const nlohmann::json& doc,
                                const ValidationOptions& options = {});
SurveyInstance read_survey_json(const std::filesystem::path& path,
                                const ValidationOptions& options = {});

/// n rows of n comma-separated values; empty cells are blank answers (0).
std::vector<std::vector<double>> read_matrix_csv(std::istream& in);
/// One rating per line; an optional non-numeric header line is skipped.
std::vector<double> read_ratings_csv(std::istream& in);

// Dispersion ----------------------------------------------------------------

enum class DispersionCsvForm { LongForm, PreCounted };

struct DispersionInput {
  DispersionCsvForm form = DispersionCsvForm::LongForm;
  // Long form: one record per label in order of first appearance.
  std::vector<InstructorRecord> records;
  // Pre-counted form.
  std::vector<DispersionRow> rows;
};

/// Header `label,rating` selects the long form, `label,n,mode,dev2,dev3plus`
/// the pre-counted form. Throws MalformedInput otherwise.
DispersionInput read_dispersion_csv(std::istream& in);

// Scenarios -----------------------------------------------------------------

/// `{ "ratings", "biased_index", "scenarios": [{ "id", "competence" }] }`
/// with optional "label" and "scale".
ScenarioSet scenario_set_from_json(const nlohmann::json& doc,
                                   const ValidationOptions& options = {});
ScenarioSet read_scenario_json(const std::filesystem::path& path,
                               const ValidationOptions& options = {});

// Reports -------------------------------------------------------------------

nlohmann::json to_json(const WeightVector& weights);
nlohmann::json degree_fragment(const WeightedRatingReport& report);
nlohmann::json eigenfactor_fragment(const WeightedRatingReport& report);
nlohmann::json to_json(const WeightedRatingReport& report);
/// Inverse of to_json(const WeightedRatingReport&). Throws MalformedInput.
WeightedRatingReport rating_report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const DispersionTable& table);
nlohmann::json to_json(const ScenarioResult& result);
nlohmann::json to_json(const ReductionSummary& summary);

}  // namespace peerrate
