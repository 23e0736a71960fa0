// gatekeeper: generate, evaluate, solve, sweep and plot gate assignments.
//
// Exit codes: 0 success, 1 input error, 2 conflicts found (evaluate),
// 3 infeasible gate count (solve).

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gatekeeper/gatekeeper.hpp"

namespace {

using namespace gatekeeper;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConflicts = 2;
constexpr int kExitInfeasible = 3;

struct ModelFlags {
  double buffer{15};
  std::string objective{"buffered"};
  std::string overlap;
};

struct LimitFlags {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> time_budget;
  std::uint64_t seed{0};
};

void add_model_flags(CLI::App& cmd, ModelFlags& flags, const std::string& default_overlap) {
  flags.overlap = default_overlap;
  cmd.add_option("--buffer", flags.buffer, "Buffer time b in minutes")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--objective", flags.objective, "Objective variant")
      ->capture_default_str()
      ->check(CLI::IsMember({"buffered", "opl"}));
  cmd.add_option("--overlap", flags.overlap, "Overlap policy")
      ->capture_default_str()
      ->check(CLI::IsMember({"hard", "soft"}));
}

void add_limit_flags(CLI::App& cmd, LimitFlags& flags) {
  cmd.add_option("--max-nodes", flags.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  cmd.add_option("--time-budget", flags.time_budget, "Search time budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", flags.seed, "Seed for randomized search order")->capture_default_str();
}

ModelConfig to_config(const ModelFlags& flags) {
  ModelConfig cfg;
  cfg.buffer = flags.buffer;
  cfg.objective_variant =
      flags.objective == "opl" ? ObjectiveVariant::opl_compat : ObjectiveVariant::buffered;
  cfg.overlap_policy = flags.overlap == "soft" ? OverlapPolicy::soft : OverlapPolicy::hard;
  return cfg;
}

SearchLimits to_limits(const LimitFlags& flags) {
  return {flags.max_nodes, flags.time_budget, flags.seed};
}

// GATEKEEPER_<FLAG> for every long flag, e.g. --time-budget -> GATEKEEPER_TIME_BUDGET.
void bind_environment(CLI::App& app) {
  for (CLI::App* sub : app.get_subcommands({})) bind_environment(*sub);
  for (CLI::Option* opt : app.get_options()) {
    const auto& names = opt->get_lnames();
    if (names.empty() || names.front() == "help") continue;
    std::string env = "GATEKEEPER_";
    for (char c : names.front()) env += c == '-' ? '_' : static_cast<char>(std::toupper(c));
    opt->envname(env);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

Schedule read_schedule(const std::string& path) {
  auto in = open_input(path);
  return parse_schedule(in);
}

Assignment read_assignment(const std::string& path, std::optional<int> gates) {
  auto in = open_input(path);
  return parse_assignment(in, gates);
}

// Writes to `path`, or to `fallback` when path is empty.
template <class Write>
void write_output(const std::string& path, std::ostream& fallback, Write&& write) {
  if (path.empty()) {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write(out);
  out.flush();
  if (!out) throw Error("failed writing " + path);
}

// "1-10,15,20" -> {1..10, 15, 20}
std::vector<int> parse_gate_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    try {
      std::size_t used = 0;
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        if (hi < lo) throw std::invalid_argument(item);
        for (int c = lo; c <= hi; ++c) out.push_back(c);
      }
    } catch (const std::logic_error&) {
      throw ParseError(0, "bad gate list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError(0, "empty gate list");
  for (int c : out)
    if (c < 1) throw ParseError(0, "gate counts must be positive");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Airport gate assignment: evaluate, solve and sweep gate counts"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic day of flights as CSV");
  GeneratorSpec spec;
  std::string gen_out;
  gen->add_option("--flights", spec.flight_count, "Number of flights")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", spec.rng_seed, "Random seed")->capture_default_str();
  gen->add_option("--window-start", spec.window_start, "Earliest departure (minutes)")
      ->capture_default_str();
  gen->add_option("--window-end", spec.window_end, "Latest departure (minutes)")
      ->capture_default_str();
  gen->add_option("--stay", spec.stay_duration, "Minutes between arrival and departure")
      ->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output file (default: stdout)");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Score an assignment and print a JSON report");
  std::string eval_schedule, eval_assignment, eval_out;
  std::optional<int> eval_gates;
  ModelFlags eval_model;
  VerdictThresholds thresholds;
  eval->add_option("schedule", eval_schedule, "Schedule CSV")->required();
  eval->add_option("assignment", eval_assignment, "Assignment CSV (flight_id,gate)")->required();
  eval->add_option("--gates", eval_gates, "Gate count (default: highest gate used)")
      ->check(CLI::PositiveNumber);
  add_model_flags(*eval, eval_model, "soft");
  eval->add_option("--poor-above", thresholds.poor_above, "Objective above which verdict is poor")
      ->capture_default_str();
  eval->add_option("--good-below", thresholds.good_below, "Objective below which verdict is good")
      ->capture_default_str();
  eval->add_option("-o,--output", eval_out, "Report file (default: stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Assign flights to gates");
  std::string solve_schedule, solve_out, solve_summary, solve_solver = "exact";
  int solve_gates = 0;
  ModelFlags solve_model;
  LimitFlags solve_limits;
  solve_cmd->add_option("schedule", solve_schedule, "Schedule CSV")->required();
  solve_cmd->add_option("--gates", solve_gates, "Number of gates")
      ->required()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--solver", solve_solver, "Solver")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "greedy", "local"}));
  add_model_flags(*solve_cmd, solve_model, "hard");
  add_limit_flags(*solve_cmd, solve_limits);
  solve_cmd->add_option("-o,--output", solve_out, "Assignment CSV (default: stdout)");
  solve_cmd->add_option("--summary", solve_summary, "Summary JSON (default: stderr)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve for each of several gate counts");
  std::string sweep_schedule, sweep_gates = "1-10,15,20,30,50", sweep_solver = "exact";
  std::string sweep_format = "text", sweep_csv;
  ModelFlags sweep_model;
  LimitFlags sweep_limits;
  sweep_cmd->add_option("schedule", sweep_schedule, "Schedule CSV")->required();
  sweep_cmd->add_option("--gates", sweep_gates, "Gate counts, e.g. 1-10,15,20")
      ->capture_default_str();
  sweep_cmd->add_option("--solver", sweep_solver, "Solver")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "greedy", "local"}));
  sweep_cmd->add_option("--format", sweep_format, "Standard output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv"}));
  sweep_cmd->add_option("--csv", sweep_csv, "Also write the table as CSV to this file");
  add_model_flags(*sweep_cmd, sweep_model, "hard");
  add_limit_flags(*sweep_cmd, sweep_limits);

  // plot
  auto* plot = app.add_subcommand("plot", "Render SVG scatter plot and Gantt chart");
  std::string plot_schedule, plot_assignment, scatter_path = "scatter.svg",
                                                gantt_path = "gantt.svg";
  std::optional<int> plot_gates;
  ModelFlags plot_model;
  plot->add_option("schedule", plot_schedule, "Schedule CSV")->required();
  plot->add_option("--assignment", plot_assignment, "Assignment CSV; enables the Gantt chart");
  plot->add_option("--gates", plot_gates, "Gate count (default: highest gate used)")
      ->check(CLI::PositiveNumber);
  plot->add_option("--scatter", scatter_path, "Scatter plot output")->capture_default_str();
  plot->add_option("--gantt", gantt_path, "Gantt chart output")->capture_default_str();
  add_model_flags(*plot, plot_model, "soft");

  bind_environment(app);
  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto schedule = generate_instance(spec);
      write_output(gen_out, std::cout, [&](std::ostream& os) { write_schedule_csv(os, schedule); });
      return kExitOk;
    }

    if (*eval) {
      const auto schedule = read_schedule(eval_schedule);
      const auto assignment = read_assignment(eval_assignment, eval_gates);
      const auto report = evaluate(schedule, assignment, to_config(eval_model), thresholds);
      write_output(eval_out, std::cout,
                   [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
      return report.feasible ? kExitOk : kExitConflicts;
    }

    if (*solve_cmd) {
      const auto schedule = read_schedule(solve_schedule);
      const auto result = solve(schedule, solve_gates, parse_solver_kind(solve_solver),
                                to_config(solve_model), to_limits(solve_limits));
      write_output(solve_out, std::cout, [&](std::ostream& os) {
        write_assignment_csv(os, schedule, result.assignment);
      });
      write_output(solve_summary, std::cerr, [&](std::ostream& os) {
        auto j = to_json(result);
        j["solver"] = solve_solver;
        os << j.dump(2) << '\n';
      });
      return kExitOk;
    }

    if (*sweep_cmd) {
      const auto schedule = read_schedule(sweep_schedule);
      const auto rows = run_sweep(schedule, parse_gate_list(sweep_gates),
                                  parse_solver_kind(sweep_solver), to_config(sweep_model),
                                  to_limits(sweep_limits));
      if (sweep_format == "csv")
        write_sweep_csv(std::cout, rows);
      else
        write_sweep_table(std::cout, rows);
      if (!sweep_csv.empty())
        write_output(sweep_csv, std::cout, [&](std::ostream& os) { write_sweep_csv(os, rows); });
      const bool all_proven = std::all_of(rows.begin(), rows.end(),
                                          [](const SweepRow& r) { return r.proven_optimal; });
      std::cerr << "objectives non-increasing: " << (objectives_non_increasing(rows) ? "yes" : "no")
                << (all_proven ? "" : " (some rows not proven optimal)") << '\n';
      return kExitOk;
    }

    if (*plot) {
      const auto schedule = read_schedule(plot_schedule);
      write_output(scatter_path, std::cout,
                   [&](std::ostream& os) { emit_scatter_plot(schedule, os); });
      if (!plot_assignment.empty()) {
        const auto assignment = read_assignment(plot_assignment, plot_gates);
        write_output(gantt_path, std::cout, [&](std::ostream& os) {
          emit_gantt(schedule, assignment, to_config(plot_model), os);
        });
      }
      return kExitOk;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
