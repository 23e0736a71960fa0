#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gatekeeper/evaluator.hpp"
#include "oracle.hpp"

using namespace gatekeeper;

namespace {

const ModelConfig kHard{15, ObjectiveVariant::buffered, OverlapPolicy::hard};
const ModelConfig kSoft{15, ObjectiveVariant::buffered, OverlapPolicy::soft};

Schedule three_flights() {
  return Schedule{{{"f1", 0, 60}, {"f2", 100, 160}, {"f3", 200, 260}}};
}

Assignment gates(std::initializer_list<std::pair<const char*, int>> m, int c) {
  Assignment a{c, {}};
  for (auto [id, g] : m) a.gate_of.emplace(id, g);
  return a;
}

}  // namespace

TEST(SameGate, Indicator) {
  const auto a = gates({{"A", 1}, {"B", 1}, {"C", 2}}, 2);
  EXPECT_TRUE(same_gate(a, "A", "B"));
  EXPECT_FALSE(same_gate(a, "A", "C"));
  EXPECT_FALSE(same_gate(a, "A", "A"));
  EXPECT_THROW(same_gate(a, "A", "Z"), UnknownFlightError);
}

TEST(HardConflicts, Examples) {
  const Schedule s{{{"A", 600, 660}, {"B", 650, 710}}};
  const auto one = hard_conflicts(s, gates({{"A", 1}, {"B", 1}}, 1), kHard);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (FlightPair{"A", "B"}));
  EXPECT_TRUE(hard_conflicts(s, gates({{"A", 1}, {"B", 2}}, 2), kHard).empty());

  const Schedule apart{{{"A", 600, 660}, {"B", 700, 760}}};
  EXPECT_TRUE(hard_conflicts(apart, gates({{"A", 1}, {"B", 1}}, 1), kHard).empty());
}

TEST(Objective, ThreeFlightExamples) {
  const auto s = three_flights();
  // Frozen from an exact rational computation: 1/70 + 1/70 + 1/170 = 41/1190.
  EXPECT_NEAR(objective(s, gates({{"f1", 1}, {"f2", 1}, {"f3", 1}}, 1), kHard), 41.0 / 1190,
              1e-15);
  EXPECT_EQ(objective(s, gates({{"f1", 1}, {"f2", 2}, {"f3", 3}}, 3), kHard), 0.0);
  EXPECT_NEAR(objective(s, gates({{"f1", 1}, {"f2", 2}, {"f3", 1}}, 2), kHard), 1.0 / 170, 1e-15);
}

TEST(Objective, OplVariantUsesRawGap) {
  ModelConfig opl = kHard;
  opl.objective_variant = ObjectiveVariant::opl_compat;
  EXPECT_NEAR(objective(three_flights(), gates({{"f1", 1}, {"f2", 1}, {"f3", 1}}, 1), opl),
              1.0 / 40 + 1.0 / 40 + 1.0 / 140, 1e-15);
}

TEST(Objective, HardPolicyRejectsConflictsSoftCountsThem) {
  const Schedule s{{{"A", 600, 660}, {"B", 650, 710}}};
  const auto a = gates({{"A", 1}, {"B", 1}}, 1);
  EXPECT_THROW(objective(s, a, kHard), InfeasibleError);
  EXPECT_DOUBLE_EQ(objective(s, a, kSoft), 1.0);
}

TEST(Objective, CoverageAndRangeErrors) {
  const auto s = three_flights();
  EXPECT_THROW(objective(s, gates({{"f1", 1}, {"f2", 1}}, 1), kHard), InvariantError);
  EXPECT_THROW(objective(s, gates({{"f1", 1}, {"f2", 1}, {"f3", 3}}, 2), kHard), GateRangeError);
  EXPECT_THROW(objective(s, gates({{"f1", 1}, {"f2", 1}, {"f3", 1}, {"zz", 1}}, 1), kHard),
               UnknownFlightError);
}

TEST(Evaluate, Reports) {
  const Schedule single{{{"A", 600, 660}}};
  const auto r0 = evaluate(single, gates({{"A", 1}}, 1), kSoft);
  EXPECT_EQ(r0.objective, 0.0);
  EXPECT_EQ(r0.verdict, Verdict::good);
  EXPECT_TRUE(r0.feasible);

  const auto r1 = evaluate(three_flights(), gates({{"f1", 1}, {"f2", 2}, {"f3", 1}}, 2), kSoft);
  EXPECT_NEAR(r1.objective, 1.0 / 170, 1e-15);
  EXPECT_EQ(r1.verdict, Verdict::good);
  ASSERT_EQ(r1.per_gate.size(), 2u);
  EXPECT_EQ(r1.per_gate[0], (std::vector<FlightId>{"f1", "f3"}));
  EXPECT_EQ(r1.per_gate[1], (std::vector<FlightId>{"f2"}));
}

TEST(Evaluate, CongestedScheduleIsPoorAndHardPolicyStillReports) {
  // 40 flights stacked on one gate: hundreds of colliding pairs.
  std::vector<Flight> flights;
  for (int i = 0; i < 40; ++i) flights.push_back({"F" + std::to_string(i), 600.0 + i, 660.0 + i});
  const Schedule s{std::move(flights)};
  Assignment a{1, {}};
  for (const auto& f : s) a.gate_of.emplace(f.id, 1);
  const auto r = evaluate(s, a, kHard);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.hard_conflicts.size(), 40u * 39 / 2);
  EXPECT_EQ(r.verdict, Verdict::poor);
}

TEST(Evaluate, VerdictThresholds) {
  EXPECT_EQ(classify(10.5), Verdict::poor);
  EXPECT_EQ(classify(10.0), Verdict::acceptable);
  EXPECT_EQ(classify(0.5), Verdict::acceptable);
  EXPECT_EQ(classify(0.49), Verdict::good);
  EXPECT_EQ(classify(3.0, {2.0, 0.1}), Verdict::poor);
}

TEST(MinGatesLowerBound, Examples) {
  const Schedule noon{{{"A", 700, 760}, {"B", 710, 770}, {"C", 715, 775}}};
  EXPECT_EQ(min_gates_lower_bound(noon, 15), 3);
  EXPECT_EQ(min_gates_lower_bound(three_flights(), 15), 1);
  // Touching locked intervals need only one gate.
  const Schedule touching{{{"A", 600, 660}, {"B", 690, 750}}};
  EXPECT_EQ(min_gates_lower_bound(touching, 15), 1);
  EXPECT_EQ(min_gates_lower_bound(touching, 15.5), 2);
  EXPECT_THROW(min_gates_lower_bound(Schedule{}, 15), InvariantError);
}

TEST(MinGatesLowerBound, MatchesPointCountOracle) {
  std::mt19937_64 rng{3};
  for (int k = 0; k < 300; ++k) {
    const auto s = oracle::random_schedule(rng, 1 + k % 20);
    for (double b : {0.0, 5.0, 15.0})
      EXPECT_EQ(min_gates_lower_bound(s, b), oracle::clique_by_points(oracle::times_of(s), b));
  }
}

// Randomized checks of the objective against the 0/1 formulation.
TEST(Objective, MatchesFormulationOracle) {
  std::mt19937_64 rng{5};
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + k % 9;
    const auto s = oracle::random_schedule(rng, n);
    const int c = 1 + static_cast<int>(rng() % 4);
    const double b = (k % 3) * 7.5;
    std::vector<int> g(n);
    for (auto& x : g) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(c));
    const auto a = Assignment::from_gates(s, c, g);
    for (bool opl : {false, true}) {
      ModelConfig soft{b, opl ? ObjectiveVariant::opl_compat : ObjectiveVariant::buffered,
                       OverlapPolicy::soft};
      ModelConfig hard = soft;
      hard.overlap_policy = OverlapPolicy::hard;
      const auto times = oracle::times_of(s);
      const auto expect_soft = oracle::formulation_objective(times, g, c, b, opl, true);
      EXPECT_NEAR(objective(s, a, soft), *expect_soft, 1e-9 * std::max(1.0, *expect_soft));
      const auto expect_hard = oracle::formulation_objective(times, g, c, b, opl, false);
      if (expect_hard) {
        EXPECT_NEAR(objective(s, a, hard), *expect_hard, 1e-9 * std::max(1.0, *expect_hard));
        EXPECT_TRUE(hard_conflicts(s, a, hard).empty());
      } else {
        EXPECT_THROW(objective(s, a, hard), InfeasibleError);
        EXPECT_FALSE(hard_conflicts(s, a, hard).empty());
      }
    }
  }
}

TEST(Objective, InvariantUnderGateRelabeling) {
  std::mt19937_64 rng{9};
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 10;
    const auto s = oracle::random_schedule(rng, n, 2000);
    const int c = 4;
    std::vector<int> g(n);
    for (auto& x : g) x = 1 + static_cast<int>(rng() % 4);
    std::vector<int> perm{1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> relabeled(n);
    for (std::size_t i = 0; i < n; ++i) relabeled[i] = perm[static_cast<std::size_t>(g[i] - 1)];
    const double x = objective(s, Assignment::from_gates(s, c, g), kSoft);
    const double y = objective(s, Assignment::from_gates(s, c, relabeled), kSoft);
    EXPECT_NEAR(x, y, 1e-12 * std::max(1.0, x));
  }
}

TEST(Objective, ZeroExactlyWhenNoGateIsShared) {
  std::mt19937_64 rng{13};
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 8;
    const auto s = oracle::random_schedule(rng, n, 3000);
    const int c = static_cast<int>(n);
    std::vector<int> g(n);
    for (auto& x : g) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(c));
    const auto a = Assignment::from_gates(s, c, g);
    if (!hard_conflicts(s, a, kHard).empty()) continue;
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    const bool shared = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    EXPECT_EQ(objective(s, a, kHard) == 0.0, !shared);
  }
}

TEST(HardConflicts, EmptyIffSortedNeighboursDisjoint) {
  std::mt19937_64 rng{17};
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 10;
    const auto s = oracle::random_schedule(rng, n);
    const int c = 3;
    std::vector<int> g(n);
    for (auto& x : g) x = 1 + static_cast<int>(rng() % 3);
    const auto a = Assignment::from_gates(s, c, g);
    const auto report = evaluate(s, a, kHard);
    bool disjoint = true;
    for (const auto& ids : report.per_gate)
      for (std::size_t p = 1; p < ids.size(); ++p) {
        const auto& prev = s[s.index_of(ids[p - 1])];
        const auto& cur = s[s.index_of(ids[p])];
        // Sorted by arrival, so disjointness of neighbours needs no look-back
        // past the furthest-reaching earlier interval.
        double reach = prev.departure;
        for (std::size_t q = 0; q < p; ++q) reach = std::max(reach, s[s.index_of(ids[q])].departure);
        if (cur.arrival - 15 < reach + 15) disjoint = false;
      }
    EXPECT_EQ(report.feasible, disjoint);
    EXPECT_EQ(report.hard_conflicts.empty(), report.feasible);
    std::size_t total = 0;
    for (const auto& ids : report.per_gate) total += ids.size();
    EXPECT_EQ(total, n);
  }
}
