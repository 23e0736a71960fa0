#pragma once

// Solver dispatch by name and the gate-count sweep (objective and runtime
// for each candidate number of gates).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gatekeeper/error.hpp"
#include "gatekeeper/solvers.hpp"

namespace gatekeeper {

enum class SolverKind { exact, greedy, local };

inline SolverKind parse_solver_kind(std::string_view name) {
  if (name == "exact") return SolverKind::exact;
  if (name == "greedy") return SolverKind::greedy;
  if (name == "local") return SolverKind::local;
  throw InvariantError("unknown solver '" + std::string{name} + "'");
}

// `local` runs greedy construction followed by local search.
inline SolveResult solve(const Schedule& schedule, int gate_count, SolverKind kind,
                         const ModelConfig& cfg, const SearchLimits& limits = {},
                         const BranchAndBoundOptions& options = {}) {
  switch (kind) {
    case SolverKind::exact:
      return branch_and_bound(schedule, gate_count, cfg, limits, options);
    case SolverKind::greedy:
      return greedy_first_fit(schedule, gate_count, cfg);
    case SolverKind::local: {
      const auto start = greedy_first_fit(schedule, gate_count, cfg);
      auto r = local_search(schedule, start.assignment, cfg, limits);
      r.elapsed += start.elapsed;
      return r;
    }
  }
  throw InvariantError("unknown solver");
}

struct SweepRow {
  int gate_count{0};
  std::optional<double> objective;  // empty when infeasible
  double runtime{0};                // seconds
  bool proven_optimal{false};
  std::optional<Assignment> assignment;
};

// One row per distinct gate count, ascending. With the exact solver each row
// is warm-started from the previous feasible row, so objectives never
// increase down the table even when a budget cuts a row short.
inline std::vector<SweepRow> run_sweep(const Schedule& schedule, std::vector<int> gate_counts,
                                       SolverKind kind, const ModelConfig& cfg,
                                       const SearchLimits& limits = {}) {
  if (gate_counts.empty()) throw InvariantError("sweep needs at least one gate count");
  std::sort(gate_counts.begin(), gate_counts.end());
  gate_counts.erase(std::unique(gate_counts.begin(), gate_counts.end()), gate_counts.end());

  std::vector<SweepRow> rows;
  std::optional<Assignment> previous;
  for (int c : gate_counts) {
    SweepRow row;
    row.gate_count = c;
    detail::Stopwatch clock;
    try {
      BranchAndBoundOptions options;
      options.warm_start = previous;
      auto r = solve(schedule, c, kind, cfg, limits, options);
      row.objective = r.objective;
      row.proven_optimal = r.proven_optimal;
      previous = r.assignment;
      row.assignment = std::move(r.assignment);
    } catch (const InfeasibleError&) {
      // A gate count below the clique bound is infeasible, which is a proof.
      row.proven_optimal = kind == SolverKind::exact;
    }
    row.runtime = clock.seconds();
    rows.push_back(std::move(row));
  }
  return rows;
}

// Infeasible rows count as +infinity.
inline bool objectives_non_increasing(const std::vector<SweepRow>& rows) {
  double prev = HUGE_VAL;
  for (const auto& row : rows) {
    const double v = row.objective.value_or(HUGE_VAL);
    if (v > prev) return false;
    prev = v;
  }
  return true;
}

namespace detail {

inline std::string sweep_objective_text(const SweepRow& row) {
  if (!row.objective) return "infeasible";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", *row.objective);
  return buf;
}

inline std::string sweep_runtime_text(const SweepRow& row) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", row.runtime);
  return buf;
}

}  // namespace detail

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "gate_count,objective,runtime,proven_optimal\n";
  for (const auto& row : rows) {
    out << row.gate_count << ',';
    if (row.objective) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", *row.objective);
      out << buf;
    } else {
      out << "infeasible";
    }
    out << ',' << detail::sweep_runtime_text(row) << ',' << (row.proven_optimal ? "true" : "false")
        << '\n';
  }
}

inline void write_sweep_table(std::ostream& out, const std::vector<SweepRow>& rows) {
  char line[128];
  std::snprintf(line, sizeof line, "%6s  %12s  %16s  %7s\n", "gates", "runtime (s)", "objective",
                "optimal");
  out << line;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof line, "%6d  %12s  %16s  %7s\n", row.gate_count,
                  detail::sweep_runtime_text(row).c_str(), detail::sweep_objective_text(row).c_str(),
                  row.proven_optimal ? "yes" : "no");
    out << line;
  }
}

}  // namespace gatekeeper
