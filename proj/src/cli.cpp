#include "peerrate/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "peerrate/error.hpp"
#include "peerrate/io.hpp"
#include "peerrate/rating.hpp"
#include "peerrate/scenario.hpp"

namespace peerrate::cli {

using nlohmann::json;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateNetwork: return kExitDegenerate;
    case ErrorCode::NoConvergence: return kExitNoConvergence;
    default: return kExitInvalidInput;
  }
}

std::string_view policy_name(DiagonalPolicy p) {
  return p == DiagonalPolicy::Reject ? "reject" : "coerce";
}

std::string_view tiebreak_name(ModeTieBreak t) {
  return t == ModeTieBreak::Smallest ? "smallest" : "largest";
}

ValidationOptions validation_options(const RunConfig& config) {
  ValidationOptions options;
  options.scale = LikertScale{config.scale.at(0), config.scale.at(1)};
  options.diagonal = config.diagonal_policy;
  options.strict_likert = config.strict_likert;
  return options;
}

// The whole report is rendered before anything is written, so a failure
// never leaves partial JSON behind.
void emit(const RunConfig& config, const json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (config.output_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot write " + config.output_path);
  }
  file << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return in;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace

void RunConfig::validate() const {
  eigen.validate();
  if (scale.size() != 2 || !(scale[0] <= scale[1])) {
    throw Error(ErrorCode::InvalidArgument, "--scale needs MIN <= MAX");
  }
}

json RunConfig::to_json() const {
  json j{{"command", command},
         {"alpha", eigen.alpha},
         {"tol", eigen.tol},
         {"max_iter", eigen.max_iter},
         {"diagonal_policy", policy_name(diagonal_policy)},
         {"strict_likert", strict_likert},
         {"min_n", min_n},
         {"mode_tiebreak", tiebreak_name(mode_tiebreak)},
         {"scale", scale}};
  if (!survey_path.empty()) j["survey"] = survey_path;
  if (!ratings_csv_path.empty()) j["ratings_csv"] = ratings_csv_path;
  if (!competence_csv_path.empty()) j["competence_csv"] = competence_csv_path;
  if (!scenario_path.empty()) j["scenario_file"] = scenario_path;
  if (!output_path.empty()) j["output"] = output_path;
  return j;
}

int cmd_rate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const ValidationOptions options = validation_options(config);
    SurveyInstance survey = [&] {
      if (!config.survey_path.empty()) {
        return read_survey_json(config.survey_path, options);
      }
      if (config.ratings_csv_path.empty() || config.competence_csv_path.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    "rate needs --survey, or --ratings-csv with --competence-csv");
      }
      auto ratings_in = open_input(config.ratings_csv_path);
      auto matrix_in = open_input(config.competence_csv_path);
      return validate_survey(read_ratings_csv(ratings_in),
                             read_matrix_csv(matrix_in), options,
                             config.competence_csv_path);
    }();
    for (std::size_t i : survey.coerced_diagonal) {
      err << "warning: self-valuation of student " << i << " set to 0\n";
    }
    const WeightedRatingReport report = evaluate_survey(survey, config.eigen);
    json doc = to_json(report);
    doc["config"] = config.to_json();
    emit(config, doc, out);
    return kExitOk;
  });
}

int cmd_dispersion(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    if (config.ratings_csv_path.empty()) {
      throw Error(ErrorCode::InvalidArgument, "dispersion needs --ratings-csv");
    }
    auto in = open_input(config.ratings_csv_path);
    DispersionInput input = read_dispersion_csv(in);
    std::vector<DispersionRow> rows = std::move(input.rows);
    if (input.form == DispersionCsvForm::LongForm) {
      for (const InstructorRecord& record : input.records) {
        rows.push_back(dispersion_row(record, config.mode_tiebreak));
      }
    }
    const DispersionTable table =
        build_dispersion_table(std::move(rows), config.min_n);

    json doc = to_json(table);
    doc["form"] = input.form == DispersionCsvForm::LongForm ? "long" : "precounted";
    doc["config"] = config.to_json();

    std::ostringstream display;
    display << "label\tn\tmode\tdev2\tdev3plus\n";
    for (const DispersionRow& r : table.rows) {
      display << r.label << '\t' << r.n << '\t' << r.mode << '\t' << r.dev2
              << '\t' << r.dev3plus << '\n';
    }
    for (const ExcludedInstructor& e : table.excluded) {
      display << "excluded (n < " << config.min_n << "): " << e.label
              << " (n = " << e.n << ")\n";
    }
    const DispersionAggregate& a = table.totals;
    display << "total n " << a.total_n << ": dev2 " << percent(a.pct_dev2)
            << "%, dev3+ " << percent(a.pct_dev3plus) << "%, dev2+ "
            << percent(a.pct_dev2plus) << "%\n";

    emit(config, doc, out);
    err << display.str();
    return kExitOk;
  });
}

int cmd_scenarios(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    if (config.scenario_path.empty()) {
      throw Error(ErrorCode::InvalidArgument, "scenarios needs --scenario-file");
    }
    const ScenarioSet set =
        read_scenario_json(config.scenario_path, validation_options(config));
    const std::vector<ScenarioResult> results = run_scenarios(set, config.eigen);
    const ReductionSummary summary = error_reduction_summary(results);

    json list = json::array();
    std::ostringstream display;
    display << "id\tmean (err)\tR_d (err)\tR_e (err)\n";
    auto cell = [](const MethodOutcome& m) {
      return m.ok() ? fixed4(m.rating) + " (" + fixed4(m.error) + ")"
                    : std::string(to_string(*m.failure));
    };
    for (const ScenarioResult& r : results) {
      list.push_back(to_json(r));
      display << r.id << '\t' << fixed4(r.arithmetic_mean) << " ("
              << fixed4(r.err_mean) << ")\t" << cell(r.degree) << '\t'
              << cell(r.eigenfactor) << '\n';
    }
    if (summary.mean_degree_pct && summary.mean_eigenfactor_pct) {
      display << "mean error reduction: degree " << percent(*summary.mean_degree_pct)
              << "%, eigenfactor " << percent(*summary.mean_eigenfactor_pct)
              << "%\n";
    }

    json doc{{"schema", kSchemaVersion},
             {"label", set.label},
             {"results", std::move(list)},
             {"summary", to_json(summary)},
             {"config", config.to_json()}};
    emit(config, doc, out);
    err << display.str();
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competence-weighted teaching ratings"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, DiagonalPolicy> policies{
      {"reject", DiagonalPolicy::Reject}, {"coerce", DiagonalPolicy::Coerce}};
  const std::map<std::string, ModeTieBreak> tiebreaks{
      {"smallest", ModeTieBreak::Smallest}, {"largest", ModeTieBreak::Largest}};

  auto add_eigen = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.eigen.alpha, "Damping factor in [0, 1)")
        ->capture_default_str();
    sub->add_option("--tol", config.eigen.tol, "L1 stopping tolerance")
        ->capture_default_str();
    sub->add_option("--max-iter", config.eigen.max_iter, "Iteration cap")
        ->capture_default_str();
  };
  auto add_validation = [&](CLI::App* sub) {
    sub->add_option("--diagonal-policy", config.diagonal_policy,
                    "How to treat a nonzero self-valuation")
        ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case))
        ->option_text("reject|coerce [coerce]");
    sub->add_flag("--strict-likert", config.strict_likert,
                  "Require whole-number ratings");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", config.output_path,
                    "Report path (default: stdout)");
  };

  CLI::App* rate = app.add_subcommand("rate", "Weighted ratings for one survey");
  rate->add_option("--survey", config.survey_path, "Survey JSON file");
  rate->add_option("--ratings-csv", config.ratings_csv_path,
                   "Single-column ratings CSV");
  rate->add_option("--competence-csv", config.competence_csv_path,
                   "n x n competence matrix CSV");
  rate->add_option("--scale", config.scale, "Likert MIN MAX for CSV input")
      ->expected(2);
  add_eigen(rate);
  add_validation(rate);
  add_output(rate);

  CLI::App* dispersion =
      app.add_subcommand("dispersion", "Deviation-from-mode analysis");
  dispersion->add_option("--ratings-csv", config.ratings_csv_path,
                         "label,rating or label,n,mode,dev2,dev3plus CSV")
      ->required();
  dispersion->add_option("--min-n", config.min_n, "Minimum ratings per instructor")
      ->capture_default_str();
  dispersion->add_option("--mode-tiebreak", config.mode_tiebreak,
                         "Which mode wins a tie")
      ->transform(CLI::CheckedTransformer(tiebreaks, CLI::ignore_case))
      ->option_text("smallest|largest [smallest]");
  add_output(dispersion);

  CLI::App* scenarios =
      app.add_subcommand("scenarios", "Biased-rating scenario comparison");
  scenarios->add_option("--scenario-file", config.scenario_path,
                        "Scenario JSON file")
      ->required();
  add_eigen(scenarios);
  add_validation(scenarios);
  add_output(scenarios);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (rate->parsed()) {
    config.command = "rate";
    return cmd_rate(config, out, err);
  }
  if (dispersion->parsed()) {
    config.command = "dispersion";
    return cmd_dispersion(config, out, err);
  }
  config.command = "scenarios";
  return cmd_scenarios(config, out, err);
}

}  // namespace peerrate::cli
