#include "peerrate/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "peerrate/error.hpp"

namespace peerrate {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string strip_bom(std::string s) {
  if (s.size() >= 3 && s.compare(0, 3, "\xEF\xBB\xBF") == 0) s.erase(0, 3);
  return s;
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

template <typename Int>
bool parse_int(const std::string& text, Int& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc{} && ptr == t.data() + t.size();
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(origin + ": invalid JSON: " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<double> number_array(const json& node, const char* what) {
  if (!node.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) malformed(std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> matrix_from_json(const json& node) {
  if (!node.is_array()) malformed("\"competence\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(node.size());
  for (const json& row : node) {
    if (!row.is_array()) malformed("\"competence\" rows must be arrays");
    std::vector<double> cells;
    cells.reserve(row.size());
    for (const json& c : row) {
      if (c.is_null()) {
        cells.push_back(0.0);  // blank answer
      } else if (c.is_number()) {
        cells.push_back(c.get<double>());
      } else if (c.is_boolean()) {
        cells.push_back(c.get<bool>() ? 1.0 : 0.0);
      } else {
        malformed("competence entries must be 0, 1 or null");
      }
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

ValidationOptions with_file_scale(const json& doc, ValidationOptions options) {
  if (doc.contains("scale")) {
    const std::vector<double> scale = number_array(doc.at("scale"), "\"scale\"");
    if (scale.size() != 2) malformed("\"scale\" must be [min, max]");
    options.scale = LikertScale{scale[0], scale[1]};
  }
  return options;
}

std::string optional_label(const json& doc) {
  if (!doc.contains("label")) return {};
  const json& label = doc.at("label");
  if (label.is_string()) return label.get<std::string>();
  if (label.is_number_integer()) return std::to_string(label.get<long long>());
  malformed("\"label\" must be a string");
}

template <typename T>
std::vector<T> vector_of(const json& node, const char* what) {
  try {
    return node.get<std::vector<T>>();
  } catch (const json::exception&) {
    malformed(std::string(what) + " has the wrong element type");
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) malformed("unterminated quote in CSV line: " + line);
  fields.push_back(field);
  return fields;
}

// Survey --------------------------------------------------------------------

SurveyInstance survey_from_json(const json& doc, const ValidationOptions& options) {
  if (!doc.is_object()) malformed("survey must be a JSON object");
  const ValidationOptions effective = with_file_scale(doc, options);
  const std::vector<double> ratings =
      number_array(require(doc, "ratings"), "\"ratings\"");
  const auto matrix = matrix_from_json(require(doc, "competence"));
  return validate_survey(ratings, matrix, effective, optional_label(doc));
}

SurveyInstance read_survey_json(const std::filesystem::path& path,
                                const ValidationOptions& options) {
  return survey_from_json(parse_json_text(read_text_file(path), path.string()),
                          options);
}

std::vector<std::vector<double>> read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) line = strip_bom(line);
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split_csv_line(line)) {
      double v = 0.0;
      if (trim(cell).empty()) {
        v = 0.0;  // blank answer
      } else if (!parse_double(cell, v)) {
        malformed("matrix CSV line " + std::to_string(line_no) +
                  ": not a number: '" + cell + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> read_ratings_csv(std::istream& in) {
  std::vector<double> ratings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) line = strip_bom(line);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto fields = split_csv_line(t);
    if (fields.size() != 1) {
      malformed("ratings CSV line " + std::to_string(line_no) +
                " must hold a single value");
    }
    double v = 0.0;
    if (!parse_double(fields[0], v)) {
      if (ratings.empty() && line_no == 1) continue;  // header
      malformed("ratings CSV line " + std::to_string(line_no) +
                ": not a number: '" + fields[0] + "'");
    }
    ratings.push_back(v);
  }
  return ratings;
}

// Dispersion ----------------------------------------------------------------

DispersionInput read_dispersion_csv(std::istream& in) {
  std::string line;
  std::string header;
  std::size_t line_no = 0;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    header = trim(line_no == 1 ? strip_bom(line) : line);
  }
  if (header.empty()) malformed("dispersion CSV is empty");

  std::vector<std::string> columns;
  for (const std::string& c : split_csv_line(header)) columns.push_back(trim(c));

  DispersionInput input;
  if (columns == std::vector<std::string>{"label", "rating"}) {
    input.form = DispersionCsvForm::LongForm;
  } else if (columns ==
             std::vector<std::string>{"label", "n", "mode", "dev2", "dev3plus"}) {
    input.form = DispersionCsvForm::PreCounted;
  } else {
    malformed("unrecognized dispersion CSV header '" + header +
              "'; expected 'label,rating' or 'label,n,mode,dev2,dev3plus'");
  }

  std::map<std::string, std::size_t> slot;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    const std::string where = "dispersion CSV line " + std::to_string(line_no);
    if (fields.size() != columns.size()) {
      malformed(where + ": expected " + std::to_string(columns.size()) +
                " fields, got " + std::to_string(fields.size()));
    }
    const std::string label = trim(fields[0]);
    if (input.form == DispersionCsvForm::LongForm) {
      int rating = 0;
      if (!parse_int(fields[1], rating)) {
        malformed(where + ": rating must be an integer");
      }
      auto [it, inserted] = slot.try_emplace(label, input.records.size());
      if (inserted) input.records.push_back({label, {}});
      input.records[it->second].ratings.push_back(rating);
    } else {
      std::size_t n = 0, dev2 = 0, dev3plus = 0;
      int mode = 0;
      if (!parse_int(fields[1], n) || !parse_int(fields[2], mode) ||
          !parse_int(fields[3], dev2) || !parse_int(fields[4], dev3plus)) {
        malformed(where + ": n, mode, dev2 and dev3plus must be integers");
      }
      try {
        input.rows.push_back(precounted_row(label, n, mode, dev2, dev3plus));
      } catch (const Error& e) {
        malformed(where + ": " + e.what());
      }
    }
  }
  return input;
}

// Scenarios -----------------------------------------------------------------

ScenarioSet scenario_set_from_json(const json& doc,
                                   const ValidationOptions& options) {
  if (!doc.is_object()) malformed("scenario file must be a JSON object");
  const ValidationOptions effective = with_file_scale(doc, options);
  const std::vector<double> ratings =
      number_array(require(doc, "ratings"), "\"ratings\"");
  const json& biased = require(doc, "biased_index");
  if (!biased.is_number_integer() || biased.get<long long>() < 0) {
    malformed("\"biased_index\" must be a nonnegative integer");
  }
  const auto biased_index = biased.get<std::size_t>();

  const json& list = require(doc, "scenarios");
  if (!list.is_array() || list.empty()) {
    malformed("\"scenarios\" must be a nonempty array");
  }
  ScenarioSet set;
  set.label = optional_label(doc);
  for (const json& entry : list) {
    const json& id = require(entry, "id");
    if (!id.is_number_integer()) malformed("scenario \"id\" must be an integer");
    const auto matrix = matrix_from_json(require(entry, "competence"));
    SurveyInstance survey = validate_survey(
        ratings, matrix, effective, "scenario " + std::to_string(id.get<int>()));
    set.scenarios.emplace_back(id.get<int>(), std::move(survey), biased_index);
  }
  return set;
}

ScenarioSet read_scenario_json(const std::filesystem::path& path,
                               const ValidationOptions& options) {
  return scenario_set_from_json(
      parse_json_text(read_text_file(path), path.string()), options);
}

// Reports -------------------------------------------------------------------

json to_json(const WeightVector& weights) {
  return json(std::vector<double>(weights.weights().begin(),
                                  weights.weights().end()));
}

json degree_fragment(const WeightedRatingReport& report) {
  return json{{"method", "degree"},
              {"weights", to_json(report.degree.weights)},
              {"weighted_rating", report.degree.weighted_rating},
              {"arithmetic_mean", report.arithmetic_mean}};
}

json eigenfactor_fragment(const WeightedRatingReport& report) {
  const EigenfactorResult& e = report.eigenfactor;
  return json{{"method", "eigenfactor"},
              {"alpha", e.alpha},
              {"weights", to_json(e.weights)},
              {"influence", e.influence.x},
              {"iterations", e.influence.iterations},
              {"residual", e.influence.residual},
              {"weighted_rating", e.weighted_rating}};
}

json to_json(const WeightedRatingReport& report) {
  return json{{"schema", kSchemaVersion},
              {"label", report.label},
              {"n", report.n},
              {"arithmetic_mean", report.arithmetic_mean},
              {"degree", degree_fragment(report)},
              {"eigenfactor", eigenfactor_fragment(report)},
              {"coerced_diagonal", report.coerced_diagonal}};
}

WeightedRatingReport rating_report_from_json(const json& doc) {
  try {
    if (doc.at("schema").get<int>() != kSchemaVersion) {
      malformed("unsupported report schema");
    }
    const json& deg = doc.at("degree");
    const json& eig = doc.at("eigenfactor");
    InfluenceVector influence;
    influence.x = vector_of<double>(eig.at("influence"), "\"influence\"");
    influence.iterations = eig.at("iterations").get<int>();
    influence.residual = eig.at("residual").get<double>();
    return WeightedRatingReport{
        .label = doc.at("label").get<std::string>(),
        .n = doc.at("n").get<std::size_t>(),
        .arithmetic_mean = doc.at("arithmetic_mean").get<double>(),
        .degree = {WeightVector(vector_of<double>(deg.at("weights"), "\"weights\""),
                                WeightMethod::Degree),
                   deg.at("weighted_rating").get<double>()},
        .eigenfactor = {eig.at("alpha").get<double>(),
                        WeightVector(vector_of<double>(eig.at("weights"),
                                                       "\"weights\""),
                                     WeightMethod::Eigenfactor),
                        std::move(influence),
                        eig.at("weighted_rating").get<double>()},
        .coerced_diagonal = vector_of<std::size_t>(doc.at("coerced_diagonal"),
                                                   "\"coerced_diagonal\""),
    };
  } catch (const json::exception& e) {
    malformed(std::string("rating report: ") + e.what());
  }
}

json to_json(const DispersionTable& table) {
  json rows = json::array();
  for (const DispersionRow& r : table.rows) {
    rows.push_back({{"label", r.label},
                    {"n", r.n},
                    {"mode", r.mode},
                    {"dev2", r.dev2},
                    {"dev3plus", r.dev3plus}});
  }
  json excluded = json::array();
  for (const ExcludedInstructor& e : table.excluded) {
    excluded.push_back({{"label", e.label}, {"n", e.n}});
  }
  const DispersionAggregate& a = table.totals;
  return json{{"schema", kSchemaVersion},
              {"rows", std::move(rows)},
              {"excluded", std::move(excluded)},
              {"aggregate",
               {{"total_n", a.total_n},
                {"total_dev2", a.total_dev2},
                {"total_dev3plus", a.total_dev3plus},
                {"pct_dev2", a.pct_dev2},
                {"pct_dev3plus", a.pct_dev3plus},
                {"pct_dev2plus", a.pct_dev2plus}}}};
}

namespace {

json outcome_json(const MethodOutcome& m) {
  if (!m.ok()) {
    return json{{"error", to_string(*m.failure)}, {"message", m.message}};
  }
  return json{{"weighted_rating", m.rating},
              {"error", m.error},
              {"weights", to_json(*m.weights)}};
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string_view winner_name(Winner w) {
  switch (w) {
    case Winner::Degree: return "degree";
    case Winner::Eigenfactor: return "eigenfactor";
    case Winner::Tie: return "tie";
  }
  return "tie";
}

}  // namespace

json to_json(const ScenarioResult& result) {
  return json{{"id", result.id},
              {"arithmetic_mean", result.arithmetic_mean},
              {"unbiased_mean", result.unbiased_mean},
              {"err_mean", result.err_mean},
              {"degree", outcome_json(result.degree)},
              {"eigenfactor", outcome_json(result.eigenfactor)}};
}

json to_json(const ReductionSummary& summary) {
  json rows = json::array();
  for (const ScenarioReduction& r : summary.scenarios) {
    rows.push_back({{"id", r.id},
                    {"degree_reduction_pct", optional_number(r.degree_pct)},
                    {"eigenfactor_reduction_pct",
                     optional_number(r.eigenfactor_pct)},
                    {"division_by_zero", r.division_by_zero},
                    {"winner", r.winner ? json(winner_name(*r.winner))
                                        : json(nullptr)}});
  }
  return json{{"scenarios", std::move(rows)},
              {"mean_degree_reduction_pct", optional_number(summary.mean_degree_pct)},
              {"mean_eigenfactor_reduction_pct",
               optional_number(summary.mean_eigenfactor_pct)},
              {"eigenfactor_never_worse", summary.eigenfactor_never_worse}};
}

}  // namespace peerrate
