#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "peerrate/dispersion.hpp"
#include "peerrate/eigenfactor.hpp"
#include "peerrate/error.hpp"
#include "peerrate/io.hpp"
#include "peerrate/rating.hpp"
#include "peerrate/scenario.hpp"
#include "peerrate/survey.hpp"
#include "peerrate/weights.hpp"

namespace py = pybind11;
using namespace peerrate;

namespace {

DiagonalPolicy parse_policy(const std::string& name) {
  if (name == "coerce") return DiagonalPolicy::Coerce;
  if (name == "reject") return DiagonalPolicy::Reject;
  throw Error(ErrorCode::InvalidArgument, "diagonal_policy must be 'coerce' or 'reject'");
}

ModeTieBreak parse_tiebreak(const std::string& name) {
  if (name == "smallest") return ModeTieBreak::Smallest;
  if (name == "largest") return ModeTieBreak::Largest;
  throw Error(ErrorCode::InvalidArgument, "tie_break must be 'smallest' or 'largest'");
}

LikertScale to_scale(const std::pair<double, double>& s) { return {s.first, s.second}; }

std::vector<std::vector<double>> rows_of(const SquareMatrix& m) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < m.order(); ++i)
    rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

std::vector<double> values_of(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Competence-weighted teaching ratings (C++ core)";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() {
    return py::object(py::exception<Error>(m, "PeerRateError", PyExc_ValueError));
  });
  // Raised as PeerRateError(code_name, message).
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object inst = type(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_ALPHA") = kDefaultAlpha;
  m.attr("DEFAULT_TOL") = kDefaultTolerance;
  m.attr("DEFAULT_MAX_ITER") = kDefaultMaxIterations;

  py::class_<RatingVector>(m, "RatingVector")
      .def(py::init([](std::vector<double> values, std::pair<double, double> scale,
                       bool strict) { return RatingVector(std::move(values), to_scale(scale), strict); }),
           py::arg("values"), py::arg("scale") = std::pair{1.0, 5.0},
           py::arg("strict_likert") = false)
      .def_property_readonly("values", [](const RatingVector& r) { return values_of(r.values()); })
      .def("mean", &RatingVector::mean)
      .def("__len__", &RatingVector::size);

  py::class_<CompetenceMatrix>(m, "CompetenceMatrix")
      .def(py::init<const std::vector<std::vector<int>>&>(), py::arg("rows"))
      .def_property_readonly("order", &CompetenceMatrix::order)
      .def("to_rows", &CompetenceMatrix::to_rows);

  py::class_<SurveyInstance>(m, "SurveyInstance")
      .def_readonly("label", &SurveyInstance::label)
      .def_readonly("ratings", &SurveyInstance::ratings)
      .def_readonly("competence", &SurveyInstance::competence)
      .def_readonly("coerced_diagonal", &SurveyInstance::coerced_diagonal)
      .def("__len__", &SurveyInstance::size);

  m.def(
      "validate_survey",
      [](std::vector<double> ratings, std::vector<std::vector<double>> matrix,
         std::pair<double, double> scale, const std::string& policy, bool strict,
         std::string label) {
        ValidationOptions options{to_scale(scale), parse_policy(policy), strict};
        return validate_survey(ratings, matrix, options, std::move(label));
      },
      py::arg("ratings"), py::arg("competence"), py::arg("scale") = std::pair{1.0, 5.0},
      py::arg("diagonal_policy") = "coerce", py::arg("strict_likert") = false,
      py::arg("label") = "");

  py::class_<NormalizedMatrix>(m, "NormalizedMatrix")
      .def_property_readonly("entries", [](const NormalizedMatrix& d) { return rows_of(d.entries()); })
      .def_property_readonly("row_sums", [](const NormalizedMatrix& d) {
        return std::vector<int>(d.row_sums().begin(), d.row_sums().end());
      })
      .def_property_readonly("dangling", [](const NormalizedMatrix& d) {
        return std::vector<std::size_t>(d.dangling().begin(), d.dangling().end());
      })
      .def("total", &NormalizedMatrix::total);
  m.def("normalize", &normalize, py::arg("competence"));

  py::class_<WeightVector>(m, "WeightVector")
      .def_property_readonly("weights", [](const WeightVector& w) { return values_of(w.weights()); })
      .def_property_readonly("method", [](const WeightVector& w) { return std::string(to_string(w.method())); })
      .def("__len__", &WeightVector::size);
  m.def("degree_weights", &degree_weights, py::arg("normalized"));
  m.def("degree_weighted_rating", &degree_weighted_rating, py::arg("ratings"), py::arg("weights"));

  py::class_<StochasticMatrix>(m, "StochasticMatrix")
      .def_property_readonly("entries", [](const StochasticMatrix& h) { return rows_of(h.entries()); });
  m.def("build_stochastic", &build_stochastic, py::arg("normalized"));

  py::class_<TransitionModel>(m, "TransitionModel")
      .def(py::init<StochasticMatrix, double>(), py::arg("stochastic"), py::arg("alpha") = kDefaultAlpha)
      .def_property_readonly("alpha", &TransitionModel::alpha)
      .def("step", [](const TransitionModel& t, std::vector<double> x) { return t.step(x); })
      .def("materialize_p", [](const TransitionModel& t) { return rows_of(t.materialize_p()); });

  py::class_<InfluenceVector>(m, "InfluenceVector")
      .def_readonly("x", &InfluenceVector::x)
      .def_readonly("iterations", &InfluenceVector::iterations)
      .def_readonly("residual", &InfluenceVector::residual);
  m.def("stationary_distribution", &stationary_distribution, py::arg("model"),
        py::arg("tol") = kDefaultTolerance, py::arg("max_iter") = kDefaultMaxIterations);
  m.def("eigenfactor_weights", &eigenfactor_weights, py::arg("influence"), py::arg("normalized"));
  m.def("eigenfactor_weighted_rating", &eigenfactor_weighted_rating, py::arg("ratings"),
        py::arg("weights"));

  m.def(
      "evaluate_survey_json",
      [](const SurveyInstance& survey, double alpha, double tol, int max_iter) {
        return to_json(evaluate_survey(survey, {alpha, tol, max_iter})).dump();
      },
      py::arg("survey"), py::arg("alpha") = kDefaultAlpha, py::arg("tol") = kDefaultTolerance,
      py::arg("max_iter") = kDefaultMaxIterations);

  py::class_<DispersionRow>(m, "DispersionRow")
      .def_readonly("label", &DispersionRow::label)
      .def_readonly("n", &DispersionRow::n)
      .def_readonly("mode", &DispersionRow::mode)
      .def_readonly("dev2", &DispersionRow::dev2)
      .def_readonly("dev3plus", &DispersionRow::dev3plus);
  py::class_<DispersionAggregate>(m, "DispersionAggregate")
      .def_readonly("total_n", &DispersionAggregate::total_n)
      .def_readonly("total_dev2", &DispersionAggregate::total_dev2)
      .def_readonly("total_dev3plus", &DispersionAggregate::total_dev3plus)
      .def_readonly("pct_dev2", &DispersionAggregate::pct_dev2)
      .def_readonly("pct_dev3plus", &DispersionAggregate::pct_dev3plus)
      .def_readonly("pct_dev2plus", &DispersionAggregate::pct_dev2plus);

  m.def(
      "mode_of",
      [](const std::vector<int>& ratings, const std::string& tie_break) {
        return mode_of(ratings, parse_tiebreak(tie_break));
      },
      py::arg("ratings"), py::arg("tie_break") = "smallest");
  m.def(
      "dispersion_row",
      [](std::string label, std::vector<int> ratings, const std::string& tie_break) {
        return dispersion_row({std::move(label), std::move(ratings)}, parse_tiebreak(tie_break));
      },
      py::arg("label"), py::arg("ratings"), py::arg("tie_break") = "smallest");
  m.def(
      "precounted_row",
      [](std::string label, std::size_t n, int mode, std::size_t dev2, std::size_t dev3plus) {
        return precounted_row(std::move(label), n, mode, dev2, dev3plus);
      },
      py::arg("label"), py::arg("n"), py::arg("mode"), py::arg("dev2"), py::arg("dev3plus"));
  m.def(
      "aggregate", [](const std::vector<DispersionRow>& rows) { return aggregate(rows); },
      py::arg("rows"));

  m.def("inject_bias", &inject_bias, py::arg("ratings"), py::arg("index"), py::arg("value"));
  m.def(
      "run_scenarios_json",
      [](const std::string& path, double alpha, double tol, int max_iter) {
        const ScenarioSet set = read_scenario_json(path);
        const auto results = run_scenarios(set, {alpha, tol, max_iter});
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : results) list.push_back(to_json(r));
        return nlohmann::json{{"results", list}, {"summary", to_json(error_reduction_summary(results))}}
            .dump();
      },
      py::arg("path"), py::arg("alpha") = kDefaultAlpha, py::arg("tol") = kDefaultTolerance,
      py::arg("max_iter") = kDefaultMaxIterations);
}
