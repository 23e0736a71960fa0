#pragma once

// Scoring of a (schedule, assignment) pair: coverage and range checks,
// hard-conflict enumeration, the expected-conflict objective, the verdict
// used to grade a published assignment, and the clique lower bound on the
// number of gates.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gatekeeper/error.hpp"
#include "gatekeeper/schedule_model.hpp"

namespace gatekeeper {

// Gates are numbered 1..gate_count.
struct Assignment {
  int gate_count{1};
  std::map<FlightId, int> gate_of;

  friend bool operator==(const Assignment&, const Assignment&) = default;

  // Build from per-flight gates aligned with schedule order.
  static Assignment from_gates(const Schedule& schedule, int gate_count,
                               std::span<const int> gates) {
    if (gates.size() != schedule.size())
      throw InvariantError("gate vector length does not match schedule");
    Assignment a{gate_count, {}};
    for (std::size_t i = 0; i < gates.size(); ++i) a.gate_of.emplace(schedule[i].id, gates[i]);
    return a;
  }
};

// Per-flight gates in schedule order. Throws UnknownFlightError for ids not
// in the schedule, InvariantError when a scheduled flight is unassigned, and
// GateRangeError for gates outside 1..gate_count.
inline std::vector<int> gates_in_schedule_order(const Schedule& schedule, const Assignment& a) {
  if (a.gate_count < 1) throw GateRangeError("gate count must be positive");
  std::vector<int> gates(schedule.size(), 0);
  for (const auto& [id, gate] : a.gate_of) {
    const std::size_t i = schedule.index_of(id);
    if (gate < 1 || gate > a.gate_count)
      throw GateRangeError("flight " + id + " assigned to gate " + std::to_string(gate) +
                           " outside 1.." + std::to_string(a.gate_count));
    gates[i] = gate;
  }
  for (std::size_t i = 0; i < gates.size(); ++i)
    if (gates[i] == 0) throw InvariantError("flight " + schedule[i].id + " has no gate");
  return gates;
}

// y_ij: true iff i and j are distinct flights on the same gate.
inline bool same_gate(const Assignment& a, std::string_view i, std::string_view j) {
  auto lookup = [&](std::string_view id) {
    auto it = a.gate_of.find(std::string{id});
    if (it == a.gate_of.end()) throw UnknownFlightError("unknown flight id: " + std::string{id});
    return it->second;
  };
  const int gi = lookup(i);
  const int gj = lookup(j);
  return i != j && gi == gj;
}

namespace detail {

// Schedule indices on each gate (slot 0 is gate 1), ordered by arrival then
// schedule position.
inline std::vector<std::vector<std::size_t>> flights_by_gate(const Schedule& schedule,
                                                             std::span<const int> gates,
                                                             int gate_count) {
  std::vector<std::vector<std::size_t>> by_gate(static_cast<std::size_t>(gate_count));
  for (std::size_t i = 0; i < gates.size(); ++i)
    by_gate[static_cast<std::size_t>(gates[i] - 1)].push_back(i);
  for (auto& list : by_gate)
    std::stable_sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      return schedule[x].arrival < schedule[y].arrival;
    });
  return by_gate;
}

struct Tally {
  double objective{0};
  std::vector<std::pair<std::size_t, std::size_t>> conflicts;
};

// Sums expected terms over same-gate positive-gap pairs and adds 1 per
// conflicting pair regardless of policy.
inline Tally tally(const Schedule& schedule, std::span<const int> gates, int gate_count,
                   const ModelConfig& cfg) {
  ModelConfig soft = cfg;
  soft.overlap_policy = OverlapPolicy::soft;
  Tally t;
  for (const auto& list : flights_by_gate(schedule, gates, gate_count)) {
    for (std::size_t p = 0; p < list.size(); ++p) {
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        const Flight& fi = schedule[list[p]];
        const Flight& fj = schedule[list[q]];
        t.objective += *same_gate_pair_cost(fi, fj, soft);
        if (conflicts_hard(fi, fj, cfg.buffer))
          t.conflicts.emplace_back(std::min(list[p], list[q]), std::max(list[p], list[q]));
      }
    }
  }
  std::sort(t.conflicts.begin(), t.conflicts.end());
  return t;
}

}  // namespace detail

using FlightPair = std::pair<FlightId, FlightId>;

// Every same-gate pair whose locked intervals intersect, listed once with
// the earlier-scheduled flight first.
inline std::vector<FlightPair> hard_conflicts(const Schedule& schedule, const Assignment& a,
                                              const ModelConfig& cfg) {
  const auto gates = gates_in_schedule_order(schedule, a);
  std::vector<FlightPair> out;
  for (auto [i, j] : detail::tally(schedule, gates, a.gate_count, cfg).conflicts)
    out.emplace_back(schedule[i].id, schedule[j].id);
  return out;
}

// Objective over flights already resolved to gates. Under the hard policy a
// conflicting pair raises InfeasibleError.
inline double objective_for_gates(const Schedule& schedule, std::span<const int> gates,
                                  int gate_count, const ModelConfig& cfg) {
  validate(cfg);
  const auto t = detail::tally(schedule, gates, gate_count, cfg);
  if (cfg.overlap_policy == OverlapPolicy::hard && !t.conflicts.empty()) {
    const auto [i, j] = t.conflicts.front();
    throw InfeasibleError("flights " + schedule[i].id + " and " + schedule[j].id +
                          " overlap on the same gate");
  }
  return t.objective;
}

// Sum over same-gate ordered pairs with positive gap of the expected term;
// under the soft policy each conflicting pair adds 1.
inline double objective(const Schedule& schedule, const Assignment& a, const ModelConfig& cfg) {
  const auto gates = gates_in_schedule_order(schedule, a);
  return objective_for_gates(schedule, gates, a.gate_count, cfg);
}

enum class Verdict { good, acceptable, poor };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::good: return "good";
    case Verdict::acceptable: return "acceptable";
    case Verdict::poor: return "poor";
  }
  return "unknown";
}

struct VerdictThresholds {
  double poor_above{10.0};
  double good_below{0.5};
};

inline Verdict classify(double objective, const VerdictThresholds& th = {}) {
  if (objective > th.poor_above) return Verdict::poor;
  if (objective < th.good_below) return Verdict::good;
  return Verdict::acceptable;
}

struct EvaluationReport {
  double objective{0};
  std::vector<FlightPair> hard_conflicts;
  bool feasible{true};
  // per_gate[k] lists the flights on gate k + 1 in arrival order.
  std::vector<std::vector<FlightId>> per_gate;
  Verdict verdict{Verdict::good};
};

// Never fails on conflicts: they are reported, counted at cost 1 each in the
// objective, and make the report infeasible.
inline EvaluationReport evaluate(const Schedule& schedule, const Assignment& a,
                                 const ModelConfig& cfg, const VerdictThresholds& th = {}) {
  validate(cfg);
  const auto gates = gates_in_schedule_order(schedule, a);
  const auto t = detail::tally(schedule, gates, a.gate_count, cfg);

  EvaluationReport r;
  r.objective = t.objective;
  for (auto [i, j] : t.conflicts) r.hard_conflicts.emplace_back(schedule[i].id, schedule[j].id);
  r.feasible = r.hard_conflicts.empty();
  for (const auto& list : detail::flights_by_gate(schedule, gates, a.gate_count)) {
    auto& ids = r.per_gate.emplace_back();
    for (std::size_t i : list) ids.push_back(schedule[i].id);
  }
  r.verdict = classify(r.objective, th);
  return r;
}

// Maximum number of locked intervals covering one instant. Touching
// intervals do not overlap, so ends are processed before starts at equal
// times.
inline int min_gates_lower_bound(std::span<const Flight> flights, Minutes buffer) {
  if (flights.empty()) throw InvariantError("lower bound needs a non-empty schedule");
  std::vector<std::pair<Minutes, int>> events;
  events.reserve(2 * flights.size());
  for (const auto& f : flights) {
    const auto iv = locked_interval(f, buffer);
    events.emplace_back(iv.start, +1);
    events.emplace_back(iv.end, -1);
  }
  std::sort(events.begin(), events.end());
  int live = 0;
  int best = 0;
  for (const auto& [t, delta] : events) {
    live += delta;
    best = std::max(best, live);
  }
  return best;
}

inline int min_gates_lower_bound(const Schedule& schedule, Minutes buffer) {
  return min_gates_lower_bound(schedule.flights(), buffer);
}

}  // namespace gatekeeper
