#pragma once

#include <stdexcept>
#include <vector>

#include "golden.hpp"
#include "peerrate/io.hpp"
#include "peerrate/scenario.hpp"

namespace peerrate::golden {

inline const ScenarioSet& scenario_set() {
  static const ScenarioSet set = read_scenario_json(scenario_file());
  return set;
}

/// Competence rows of scenario `id` (1-based).
inline std::vector<std::vector<int>> matrix(int id) {
  for (const Scenario& s : scenario_set().scenarios)
    if (s.id == id) return s.survey.competence.to_rows();
  return {};
}

inline const Scenario& scenario(int id) {
  for (const Scenario& s : scenario_set().scenarios)
    if (s.id == id) return s;
  throw std::out_of_range("no such scenario");
}

}  // namespace peerrate::golden
