#pragma once

// Solvers for the gate assignment problem: exhaustive enumeration of
// gate-canonical assignments, depth-first branch and bound, first-fit greedy
// construction, and hill-climbing local search.
//
// All solvers return a SolveResult whose objective is recomputed by the
// evaluator on the returned assignment.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gatekeeper/error.hpp"
#include "gatekeeper/evaluator.hpp"
#include "gatekeeper/schedule_model.hpp"

namespace gatekeeper {

struct SearchLimits {
  std::optional<std::uint64_t> max_nodes;  // unlimited when empty
  std::optional<double> time_budget;       // seconds, unlimited when empty
  std::uint64_t rng_seed{0};
};

inline void validate(const SearchLimits& limits) {
  if (limits.max_nodes && *limits.max_nodes == 0)
    throw InvariantError("node budget must be positive");
  if (limits.time_budget && !(*limits.time_budget > 0))
    throw InvariantError("time budget must be positive");
}

struct SolveResult {
  Assignment assignment;
  double objective{0};
  bool proven_optimal{false};
  std::uint64_t nodes_explored{0};
  double elapsed{0};  // seconds
};

inline constexpr std::size_t kBruteForceMaxFlights = 12;

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class Budget {
 public:
  explicit Budget(const SearchLimits& limits) : limits_{limits} {}

  // Charges one node; returns false once a budget is exhausted.
  bool charge() {
    if (exhausted_) return false;
    ++nodes_;
    if (limits_.max_nodes && nodes_ > *limits_.max_nodes) exhausted_ = true;
    if (limits_.time_budget && (nodes_ & 1023) == 0 && clock_.seconds() > *limits_.time_budget)
      exhausted_ = true;
    if (exhausted_) --nodes_;
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed() const { return clock_.seconds(); }

 private:
  SearchLimits limits_;
  Stopwatch clock_;
  std::uint64_t nodes_{0};
  bool exhausted_{false};
};

inline void check_solver_input(const Schedule& schedule, int gate_count, const ModelConfig& cfg) {
  validate(cfg);
  if (schedule.empty()) throw InvariantError("solvers need a non-empty schedule");
  if (gate_count < 1) throw GateRangeError("gate count must be positive");
}

// Schedule indices ordered by arrival, ties by schedule position.
inline std::vector<std::size_t> arrival_order(const Schedule& schedule) {
  std::vector<std::size_t> order(schedule.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return schedule[x].arrival < schedule[y].arrival;
  });
  return order;
}

inline SolveResult finish(const Schedule& schedule, int gate_count, std::vector<int> gates,
                          const ModelConfig& cfg, bool proven, std::uint64_t nodes,
                          double elapsed) {
  SolveResult r;
  r.objective = objective_for_gates(schedule, gates, gate_count, cfg);
  r.assignment = Assignment::from_gates(schedule, gate_count, gates);
  r.proven_optimal = proven;
  r.nodes_explored = nodes;
  r.elapsed = elapsed;
  return r;
}

}  // namespace detail

// Calls visit(gates) for every gate-canonical assignment of n flights to at
// most gate_count gates: flight 0 is on gate 1 and each later flight uses an
// existing gate or opens the next one. Gates are 1-based. The span passed to
// visit is only valid during the call.
template <class Visit>
void for_each_canonical_assignment(std::size_t n, int gate_count, Visit&& visit) {
  if (n == 0 || gate_count < 1) return;
  std::vector<int> gates(n, 1);
  std::vector<int> opened(n, 1);  // opened[k]: gates in use among flights 0..k
  while (true) {
    visit(std::span<const int>{gates});
    // Advance the rightmost flight that can still take a higher gate.
    std::size_t k = n - 1;
    while (k > 0) {
      const int limit = std::min(opened[k - 1] + 1, gate_count);
      if (gates[k] < limit) break;
      --k;
    }
    if (k == 0) return;
    ++gates[k];
    opened[k] = std::max(opened[k - 1], gates[k]);
    for (std::size_t m = k + 1; m < n; ++m) {
      gates[m] = 1;
      opened[m] = opened[k];
    }
  }
}

inline std::uint64_t count_canonical_assignments(std::size_t n, int gate_count) {
  std::uint64_t count = 0;
  for_each_canonical_assignment(n, gate_count, [&](std::span<const int>) { ++count; });
  return count;
}

// Exhaustive minimum over gate-canonical assignments, scored by the
// evaluator. Intended as a reference for small instances only.
inline SolveResult brute_force(const Schedule& schedule, int gate_count, const ModelConfig& cfg) {
  detail::check_solver_input(schedule, gate_count, cfg);
  if (schedule.size() > kBruteForceMaxFlights)
    throw InstanceTooLargeError("brute force is limited to " +
                                std::to_string(kBruteForceMaxFlights) + " flights");
  detail::Stopwatch clock;
  std::optional<std::vector<int>> best;
  double best_value = std::numeric_limits<double>::infinity();
  std::uint64_t visited = 0;
  for_each_canonical_assignment(schedule.size(), gate_count, [&](std::span<const int> gates) {
    ++visited;
    const auto t = detail::tally(schedule, gates, gate_count, cfg);
    if (cfg.overlap_policy == OverlapPolicy::hard && !t.conflicts.empty()) return;
    if (t.objective < best_value) {
      best_value = t.objective;
      best.emplace(gates.begin(), gates.end());
    }
  });
  if (!best)
    throw InfeasibleError("no conflict-free assignment with " + std::to_string(gate_count) +
                          " gates");
  return detail::finish(schedule, gate_count, std::move(*best), cfg, true, visited,
                        clock.seconds());
}

// Flights in arrival order, each placed on the gate with the smallest
// incremental objective; ties go to the lowest gate index. Under the hard
// policy a gate is admissible only if the flight does not conflict with any
// flight already on it.
inline SolveResult greedy_first_fit(const Schedule& schedule, int gate_count,
                                    const ModelConfig& cfg) {
  detail::check_solver_input(schedule, gate_count, cfg);
  detail::Stopwatch clock;
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(gate_count));
  std::vector<int> gates(schedule.size(), 0);
  std::uint64_t nodes = 0;
  for (std::size_t f : detail::arrival_order(schedule)) {
    std::optional<std::size_t> best_gate;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < members.size(); ++g) {
      ++nodes;
      double cost = 0;
      bool admissible = true;
      for (std::size_t h : members[g]) {
        const auto c = same_gate_pair_cost(schedule[h], schedule[f], cfg);
        if (!c) {
          admissible = false;
          break;
        }
        cost += *c;
      }
      if (admissible && cost < best_cost) {
        best_cost = cost;
        best_gate = g;
      }
    }
    if (!best_gate)
      throw InfeasibleError("flight " + schedule[f].id + " has no admissible gate among " +
                            std::to_string(gate_count));
    members[*best_gate].push_back(f);
    gates[f] = static_cast<int>(*best_gate) + 1;
  }
  return detail::finish(schedule, gate_count, std::move(gates), cfg, false, nodes,
                        clock.seconds());
}

namespace detail {

// Mutable gate assignment with per-gate membership for move evaluation.
class LocalState {
 public:
  LocalState(const Schedule& schedule, const ModelConfig& cfg, std::vector<int> gates,
             int gate_count)
      : schedule_{schedule}, cfg_{cfg}, gates_{std::move(gates)},
        members_(static_cast<std::size_t>(gate_count)) {
    for (std::size_t i = 0; i < gates_.size(); ++i) members_[slot(i)].push_back(i);
  }

  // Cost of flight f against gate g's flights, skipping f and `skip`.
  // nullopt when some remaining flight conflicts under the hard policy.
  std::optional<double> cost_on(std::size_t f, std::size_t g,
                                std::optional<std::size_t> skip = std::nullopt) const {
    double cost = 0;
    for (std::size_t h : members_[g]) {
      if (h == f || (skip && h == *skip)) continue;
      const auto c = same_gate_pair_cost(schedule_[h], schedule_[f], cfg_);
      if (!c) return std::nullopt;
      cost += *c;
    }
    return cost;
  }

  void move(std::size_t f, std::size_t g) {
    auto& from = members_[slot(f)];
    from.erase(std::find(from.begin(), from.end(), f));
    members_[g].push_back(f);
    gates_[f] = static_cast<int>(g) + 1;
  }

  std::size_t slot(std::size_t f) const { return static_cast<std::size_t>(gates_[f] - 1); }
  std::size_t gate_slots() const { return members_.size(); }
  const std::vector<int>& gates() const { return gates_; }

 private:
  const Schedule& schedule_;
  const ModelConfig& cfg_;
  std::vector<int> gates_;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace detail

// Hill climbing from `init` with relocate and swap moves, taking the first
// strictly improving move found. Each pass scans flights in an order drawn
// from rng_seed. Stops at a local optimum or when a budget runs out; every
// evaluated move counts as one node.
inline SolveResult local_search(const Schedule& schedule, const Assignment& init,
                                const ModelConfig& cfg, const SearchLimits& limits = {}) {
  detail::check_solver_input(schedule, init.gate_count, cfg);
  validate(limits);
  auto start_gates = gates_in_schedule_order(schedule, init);
  if (cfg.overlap_policy == OverlapPolicy::hard &&
      !detail::tally(schedule, start_gates, init.gate_count, cfg).conflicts.empty())
    throw InvariantError("initial assignment has hard conflicts");

  detail::Budget budget{limits};
  detail::LocalState state{schedule, cfg, std::move(start_gates), init.gate_count};
  std::mt19937_64 rng{limits.rng_seed};
  std::vector<std::size_t> order(schedule.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const double current_scale =
      std::max(1.0, objective_for_gates(schedule, state.gates(), init.gate_count, cfg));
  const double min_gain = 1e-12 * current_scale;

  bool improved = true;
  while (improved && !budget.exhausted()) {
    improved = false;
    std::shuffle(order.begin(), order.end(), rng);

    for (std::size_t f : order) {
      const std::size_t from = state.slot(f);
      const auto here = state.cost_on(f, from);
      for (std::size_t g = 0; g < state.gate_slots(); ++g) {
        if (g == from) continue;
        if (!budget.charge()) break;
        const auto there = state.cost_on(f, g);
        if (there && *there - *here < -min_gain) {
          state.move(f, g);
          improved = true;
          break;
        }
      }
      if (budget.exhausted()) break;
    }

    for (std::size_t p = 0; p < order.size() && !budget.exhausted(); ++p) {
      for (std::size_t q = p + 1; q < order.size(); ++q) {
        const std::size_t f1 = order[p];
        const std::size_t f2 = order[q];
        const std::size_t g1 = state.slot(f1);
        const std::size_t g2 = state.slot(f2);
        if (g1 == g2) continue;
        if (!budget.charge()) break;
        const auto f1_new = state.cost_on(f1, g2, f2);
        if (!f1_new) continue;
        const auto f2_new = state.cost_on(f2, g1, f1);
        if (!f2_new) continue;
        const double delta =
            *f1_new + *f2_new - *state.cost_on(f1, g1) - *state.cost_on(f2, g2);
        if (delta < -min_gain) {
          state.move(f1, g2);
          state.move(f2, g1);
          improved = true;
        }
      }
    }
  }
  return detail::finish(schedule, init.gate_count, state.gates(), cfg, false, budget.nodes(),
                        budget.elapsed());
}

enum class BoundStrategy {
  // Objective accumulated by the partial assignment.
  partial_sum,
  // Partial sum plus, for each unassigned flight, the cheapest pair it can
  // still form with an earlier flight, minus the most expensive of those for
  // as many flights as there are unopened gates.
  fresh_gate_relaxation,
  // Partial sum plus a minimum-cost assignment giving every unassigned flight
  // a distinct immediate predecessor: an earlier unassigned flight, a used
  // gate (charged against all its flights) or an unopened gate (free). For
  // k = 2, 3, ... a further assignment pairs unassigned flights with their
  // k-th unassigned predecessor on the same gate; at most k flights per gate
  // lack one.
  chain_assignment,
};

struct BranchAndBoundOptions {
  BoundStrategy bound{BoundStrategy::chain_assignment};
  // Extra starting incumbent (e.g. the optimum for fewer gates); ignored if
  // it does not cover the schedule or conflicts.
  std::optional<Assignment> warm_start;
  // Move budget for the local search that polishes the greedy incumbent.
  std::uint64_t polish_moves{200000};
};

namespace detail {

// Minimum total cost of matching every row to a distinct column of the
// row-major rows x cols matrix (rows <= cols). Returns the chosen column per row.
class AssignmentSolver {
 public:
  const std::vector<std::size_t>& solve(const std::vector<double>& a, std::size_t rows,
                                        std::size_t cols) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    u_.assign(rows + 1, 0.0);
    v_.assign(cols + 1, 0.0);
    p_.assign(cols + 1, 0);
    way_.assign(cols + 1, 0);
    for (std::size_t i = 1; i <= rows; ++i) {
      p_[0] = i;
      std::size_t j0 = 0;
      minv_.assign(cols + 1, inf);
      used_.assign(cols + 1, 0);
      do {
        used_[j0] = 1;
        const std::size_t i0 = p_[j0];
        double delta = inf;
        std::size_t j1 = 0;
        for (std::size_t j = 1; j <= cols; ++j) {
          if (used_[j]) continue;
          const double cur = a[(i0 - 1) * cols + (j - 1)] - u_[i0] - v_[j];
          if (cur < minv_[j]) {
            minv_[j] = cur;
            way_[j] = j0;
          }
          if (minv_[j] < delta) {
            delta = minv_[j];
            j1 = j;
          }
        }
        for (std::size_t j = 0; j <= cols; ++j) {
          if (used_[j]) {
            u_[p_[j]] += delta;
            v_[j] -= delta;
          } else {
            minv_[j] -= delta;
          }
        }
        j0 = j1;
      } while (p_[j0] != 0);
      do {
        const std::size_t j1 = way_[j0];
        p_[j0] = p_[j1];
        j0 = j1;
      } while (j0 != 0);
    }
    column_of_.assign(rows, 0);
    for (std::size_t j = 1; j <= cols; ++j)
      if (p_[j] != 0) column_of_[p_[j] - 1] = j - 1;
    return column_of_;
  }

 private:
  std::vector<double> u_, v_, minv_;
  std::vector<std::size_t> p_, way_, column_of_;
  std::vector<char> used_;
};

class BranchAndBound {
 public:
  BranchAndBound(const Schedule& schedule, int gate_count, const ModelConfig& cfg,
                 const SearchLimits& limits, BoundStrategy bound)
      : schedule_{schedule}, cfg_{cfg}, gate_count_{static_cast<std::size_t>(gate_count)},
        bound_{bound}, budget_{limits}, order_{arrival_order(schedule)}, n_{order_.size()} {
    start_.resize(n_);
    end_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      const auto iv = locked_interval(schedule_[order_[p]], cfg_.buffer);
      start_[p] = iv.start;
      end_[p] = iv.end;
    }
    // Conflicting pairs never share a gate; admissibility is checked against
    // gate ends, so their entry is only a placeholder.
    cost_.assign(n_ * n_, 0.0);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = p + 1; q < n_; ++q) {
        const auto c = same_gate_pair_cost(schedule_[order_[p]], schedule_[order_[q]], cfg_);
        cost_[p * n_ + q] = c.value_or(kInf);
      }
    // cheapest_pred_[d * n + q]: cheapest compatible pair (h, q) with d <= h < q.
    cheapest_pred_.assign(n_ * n_, kInf);
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t d = q; d-- > 0;)
        cheapest_pred_[d * n_ + q] = std::min(cost(d, q), cheapest_pred_[(d + 1) * n_ + q]);

    double total = 1.0;
    for (double c : cost_)
      if (c != kInf) total += c;
    // Any matching that avoids forbidden cells costs less than total.
    forbidden_ = 2 * total;
    tolerance_ = 1e-11 * total;
    // span_[p * n + q]: most flights that fit strictly between p and q on one
    // gate, or -1 if p and q conflict.
    span_.assign(n_ * n_, -1);
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t p = q; p-- > 0;) {
        if (cost(p, q) == kInf) continue;
        int best = 0;
        for (std::size_t m = p + 1; m < q; ++m)
          if (cost(p, m) != kInf && cost(m, q) != kInf) best = std::max(best, span_[m * n_ + q] + 1);
        span_[p * n_ + q] = best;
      }

    acc_.assign(gate_count_ * n_, 0.0);
    last_end_.assign(gate_count_, -kInf);
    slot_of_.assign(n_, 0);
    incumbent_.assign(n_, 0);
  }

  void set_incumbent(const std::vector<int>& gates_in_schedule_order, double value) {
    if (value < incumbent_value_) {
      incumbent_value_ = value;
      for (std::size_t p = 0; p < n_; ++p)
        incumbent_[p] = static_cast<std::size_t>(gates_in_schedule_order[order_[p]] - 1);
    }
  }

  void run() { search(0, 0, 0.0); }

  bool complete() const { return !budget_.exhausted(); }
  std::uint64_t nodes() const { return budget_.nodes(); }
  double elapsed() const { return budget_.elapsed(); }
  bool has_incumbent() const { return incumbent_value_ < kInf; }

  std::vector<int> incumbent_gates() const {
    std::vector<int> gates(n_);
    for (std::size_t p = 0; p < n_; ++p) gates[order_[p]] = static_cast<int>(incumbent_[p]) + 1;
    return gates;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  double cost(std::size_t p, std::size_t q) const { return cost_[p * n_ + q]; }

  double future_bound(std::size_t depth, std::size_t used, double limit) {
    if (bound_ == BoundStrategy::partial_sum) return 0.0;
    if (bound_ == BoundStrategy::chain_assignment) return chain_bound(depth, used, limit);
    scratch_.clear();
    std::size_t forced_fresh = 0;
    for (std::size_t q = depth; q < n_; ++q) {
      double m = cheapest_pred_[depth * n_ + q];
      for (std::size_t g = 0; g < used; ++g)
        if (last_end_[g] <= start_[q]) m = std::min(m, acc_[g * n_ + q]);
      if (m == kInf)
        ++forced_fresh;
      else
        scratch_.push_back(m);
    }
    const std::size_t fresh = gate_count_ - used;
    if (forced_fresh > fresh) return kInf;
    std::size_t waived = std::min(fresh - forced_fresh, scratch_.size());
    if (waived > 0)
      std::nth_element(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(waived - 1),
                       scratch_.end(), std::greater<>{});
    double sum = 0;
    for (std::size_t k = waived; k < scratch_.size(); ++k) sum += scratch_[k];
    return sum;
  }

  double matched_cost(std::size_t rows, std::size_t cols) {
    const auto& column_of = assignment_.solve(matrix_, rows, cols);
    double sum = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double c = matrix_[r * cols + column_of[r]];
      if (c >= forbidden_) return kInf;
      sum += c;
    }
    return sum;
  }

  // Stops early once the bound reaches limit.
  double chain_bound(std::size_t depth, std::size_t used, double limit) {
    const std::size_t rows = n_ - depth;
    const std::size_t fresh = std::min(gate_count_ - used, rows);
    std::size_t cols = rows + used + fresh;
    matrix_.assign(rows * cols, forbidden_);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t q = depth + r;
      double* row = &matrix_[r * cols];
      for (std::size_t h = depth; h < q; ++h)
        if (cost(h, q) != kInf) row[h - depth] = cost(h, q);
      for (std::size_t g = 0; g < used; ++g)
        if (last_end_[g] <= start_[q]) row[rows + g] = acc_[g * n_ + q];
      std::fill(row + rows + used, row + cols, 0.0);
    }
    double sum = matched_cost(rows, cols);
    for (std::size_t k = 2; sum < limit && k * gate_count_ < rows; ++k) {
      const std::size_t unmatched = k * gate_count_;
      cols = rows + unmatched;
      matrix_.assign(rows * cols, forbidden_);
      for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t q = depth + r;
        double* row = &matrix_[r * cols];
        for (std::size_t h = depth; h < q; ++h)
          if (span_[h * n_ + q] >= static_cast<int>(k) - 1) row[h - depth] = cost(h, q);
        std::fill(row + rows, row + cols, 0.0);
      }
      sum += matched_cost(rows, cols);
    }
    return sum;
  }

  void assign(std::size_t p, std::size_t g, std::vector<double>& saved_row, double& saved_end) {
    slot_of_[p] = g;
    saved_end = last_end_[g];
    last_end_[g] = end_[p];
    double* row = &acc_[g * n_];
    saved_row.assign(row + p + 1, row + n_);
    for (std::size_t q = p + 1; q < n_; ++q) {
      const double c = cost(p, q);
      if (c != kInf) row[q] += c;
    }
  }

  void unassign(std::size_t p, std::size_t g, const std::vector<double>& saved_row,
                double saved_end) {
    last_end_[g] = saved_end;
    std::copy(saved_row.begin(), saved_row.end(), &acc_[g * n_ + p + 1]);
  }

  void search(std::size_t depth, std::size_t used, double partial) {
    if (!budget_.charge()) return;
    if (depth == n_) {
      if (partial < incumbent_value_) {
        incumbent_value_ = partial;
        incumbent_ = slot_of_;
      }
      return;
    }
    const double limit = incumbent_value_ - tolerance_;
    if (partial + future_bound(depth, used, limit - partial) >= limit) return;

    // Candidate gates: admissible used gates plus one fresh gate, cheapest first.
    std::vector<std::pair<double, std::size_t>> candidates;
    for (std::size_t g = 0; g < used; ++g)
      if (last_end_[g] <= start_[depth]) candidates.emplace_back(acc_[g * n_ + depth], g);
    if (used < gate_count_) candidates.emplace_back(0.0, used);
    std::stable_sort(candidates.begin(), candidates.end());

    std::vector<double> saved_row;
    for (const auto& [inc, g] : candidates) {
      if (partial + inc >= incumbent_value_ - tolerance_) break;
      double saved_end = 0;
      assign(depth, g, saved_row, saved_end);
      search(depth + 1, std::max(used, g + 1), partial + inc);
      unassign(depth, g, saved_row, saved_end);
      if (budget_.exhausted()) return;
    }
  }

  const Schedule& schedule_;
  const ModelConfig& cfg_;
  std::size_t gate_count_;
  BoundStrategy bound_;
  Budget budget_;
  std::vector<std::size_t> order_;
  std::size_t n_;
  std::vector<Minutes> start_, end_;
  std::vector<double> cost_;
  std::vector<double> cheapest_pred_;
  std::vector<double> acc_;  // acc_[g * n + q]: cost of q against gate g's flights
  std::vector<Minutes> last_end_;
  std::vector<std::size_t> slot_of_;
  std::vector<std::size_t> incumbent_;
  double incumbent_value_{kInf};
  std::vector<double> scratch_;
  double forbidden_{0}, tolerance_{0};
  std::vector<int> span_;
  std::vector<double> matrix_;
  AssignmentSolver assignment_;
};

}  // namespace detail

// Exact depth-first search over gate-canonical assignments in arrival order.
// The greedy solution, polished by local search, seeds the incumbent; it also
// decides feasibility, since first-fit in arrival order fails exactly when
// some instant is covered by more locked intervals than there are gates.
// Subtrees are pruned once their bound comes within 1e-11 of the incumbent,
// scaled by the total pair cost. On budget exhaustion the best incumbent is
// returned with proven_optimal = false.
inline SolveResult branch_and_bound(const Schedule& schedule, int gate_count,
                                    const ModelConfig& cfg, const SearchLimits& limits = {},
                                    const BranchAndBoundOptions& options = {}) {
  detail::check_solver_input(schedule, gate_count, cfg);
  validate(limits);
  if (cfg.overlap_policy != OverlapPolicy::hard)
    throw InvariantError("branch and bound supports the hard overlap policy only");

  const auto greedy = greedy_first_fit(schedule, gate_count, cfg);
  SearchLimits polish_limits{options.polish_moves, std::nullopt, limits.rng_seed};
  const auto polished = local_search(schedule, greedy.assignment, cfg, polish_limits);

  detail::BranchAndBound search{schedule, gate_count, cfg, limits, options.bound};
  search.set_incumbent(gates_in_schedule_order(schedule, polished.assignment), polished.objective);
  if (options.warm_start) {
    try {
      Assignment warm = *options.warm_start;
      warm.gate_count = gate_count;
      const auto gates = gates_in_schedule_order(schedule, warm);
      search.set_incumbent(gates, objective_for_gates(schedule, gates, gate_count, cfg));
    } catch (const Error&) {
      // unusable warm start
    }
  }
  search.run();
  return detail::finish(schedule, gate_count, search.incumbent_gates(), cfg, search.complete(),
                        search.nodes(), search.elapsed());
}

}  // namespace gatekeeper
