#pragma once

#include <nlohmann/json.hpp>

#include "gatekeeper/evaluator.hpp"
#include "gatekeeper/solvers.hpp"

namespace gatekeeper {

inline nlohmann::ordered_json to_json(const EvaluationReport& r) {
  nlohmann::ordered_json j;
  j["objective"] = r.objective;
  j["feasible"] = r.feasible;
  auto& conflicts = j["hard_conflicts"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.hard_conflicts) conflicts.push_back({a, b});
  auto& per_gate = j["per_gate"] = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < r.per_gate.size(); ++g)
    per_gate.push_back({{"gate", g + 1}, {"flights", r.per_gate[g]}});
  j["verdict"] = std::string{to_string(r.verdict)};
  return j;
}

// Runtime lives in "elapsed" so callers comparing outputs can drop it.
inline nlohmann::ordered_json to_json(const SolveResult& r) {
  nlohmann::ordered_json j;
  j["gate_count"] = r.assignment.gate_count;
  j["objective"] = r.objective;
  j["proven_optimal"] = r.proven_optimal;
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed"] = r.elapsed;
  return j;
}

}  // namespace gatekeeper
