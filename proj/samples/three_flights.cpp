// Minimal library walkthrough: score a hand-made assignment, then let the
// exact solver find the best one for each gate count.

#include <iostream>

#include "gatekeeper/gatekeeper.hpp"

int main() {
  using namespace gatekeeper;

  const Schedule schedule{{{"f1", 0, 60}, {"f2", 100, 160}, {"f3", 200, 260}}};
  const ModelConfig cfg{15, ObjectiveVariant::buffered, OverlapPolicy::soft};

  const Assignment all_on_one{1, {{"f1", 1}, {"f2", 1}, {"f3", 1}}};
  std::cout << to_json(evaluate(schedule, all_on_one, cfg)).dump(2) << '\n';

  ModelConfig solve_cfg = cfg;
  solve_cfg.overlap_policy = OverlapPolicy::hard;
  for (int gates = 1; gates <= 3; ++gates) {
    const auto r = branch_and_bound(schedule, gates, solve_cfg);
    std::cout << gates << " gate(s): objective " << r.objective << '\n';
    write_assignment_csv(std::cout, schedule, r.assignment);
  }
}
