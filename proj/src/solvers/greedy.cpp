#include <cmath>

#include "patsep/solvers.hpp"

namespace patsep {

Solution solve_greedy_setcover(const Instance& inst, const SolverOptions& options) {
  const auto& good = inst.good();
  if (good.empty()) return Solution::yes({});

  const CandidateSet cands = enumerate_candidates(inst, options);
  SolveStats stats;
  stats.candidates = cands.patterns.size();

  const std::size_t universe = good.size();
  StringMask reachable(universe);
  for (const auto& c : cands.cover) reachable |= c;
  if (!(reachable == StringMask::full(universe))) {
    throw InfeasibleError("a good string has no admissible pattern avoiding B");
  }

  StringMask uncovered = StringMask::full(universe);
  std::vector<Pattern> chosen;
  while (uncovered.any()) {
    ++stats.nodes;
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < cands.patterns.size(); ++i) {
      const std::size_t gain = cands.cover[i].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    chosen.push_back(cands.patterns[best]);
    uncovered.subtract(cands.cover[best]);
  }

  stats.approximate_size = chosen.size();
  const std::size_t k = inst.budget();
  if (chosen.size() <= k) return Solution::yes(std::move(chosen), stats);
  // greedy <= (1 + ln|G|) * optimum, so a larger cover rules out k
  const double ratio = 1.0 + std::log(static_cast<double>(universe));
  if (static_cast<double>(chosen.size()) > ratio * static_cast<double>(k)) {
    return Solution::no(stats);
  }
  return Solution::unknown(stats);
}

}  // namespace patsep
