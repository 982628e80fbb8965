#include <algorithm>
#include <unordered_map>

#include "patsep/solvers.hpp"

namespace patsep {

namespace {

// Exact set cover feasibility over the distinct inclusion-maximal cover sets.
// Failures are memoized per uncovered mask as the largest slot count that
// was proven insufficient.
class CoverFeasibility {
 public:
  CoverFeasibility(const std::vector<StringMask>& covers, std::size_t universe,
                   std::uint64_t node_budget)
      : universe_(universe), node_budget_(node_budget), containing_(universe) {
    std::vector<StringMask> distinct = covers;
    std::sort(distinct.begin(), distinct.end(), [](const StringMask& a, const StringMask& b) {
      return a.count() > b.count();
    });
    std::vector<StringMask> maximal;
    for (const auto& m : distinct) {
      const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                         [&](const StringMask& big) { return m.is_subset_of(big); });
      if (!dominated) maximal.push_back(m);
    }
    largest_ = maximal.empty() ? 0 : maximal.front().count();
    maximal_ = std::move(maximal);
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
      for (std::size_t g = 0; g < universe_; ++g) {
        if (maximal_[i].test(g)) containing_[g].push_back(i);
      }
    }
  }

  bool coverable(const StringMask& uncovered, std::size_t slots) {
    if (++nodes_ > node_budget_) {
      throw ResourceLimit("exact cover search exceeded the node budget of " +
                          std::to_string(node_budget_));
    }
    if (uncovered.none()) return true;
    if (slots == 0) return false;
    if (uncovered.count() > slots * largest_) return false;
    if (auto it = failed_.find(uncovered); it != failed_.end() && it->second >= slots) return false;

    const std::size_t g = uncovered.first();
    for (std::size_t idx : containing_[g]) {
      StringMask next = uncovered;
      next.subtract(maximal_[idx]);
      if (coverable(next, slots - 1)) return true;
    }
    auto& known = failed_[uncovered];
    known = std::max(known, slots);
    return false;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t universe_;
  std::uint64_t node_budget_;
  std::vector<StringMask> maximal_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t largest_ = 0;
  std::unordered_map<StringMask, std::size_t, StringMaskHash> failed_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Solution solve_oracle(const Instance& inst, const SolverOptions& options) {
  const auto& good = inst.good();
  if (good.empty()) return Solution::yes({});

  const CandidateSet cands = enumerate_candidates(inst, options);
  SolveStats stats;
  stats.candidates = cands.patterns.size();

  const std::size_t universe = good.size();
  const StringMask all = StringMask::full(universe);
  StringMask reachable(universe);
  for (const auto& c : cands.cover) reachable |= c;
  if (!(reachable == all)) return Solution::no(stats);

  CoverFeasibility feasibility(cands.cover, universe, options.node_budget);
  const std::size_t max_slots = std::min(inst.budget(), universe);
  std::optional<std::size_t> minimum;
  for (std::size_t t = 0; t <= max_slots; ++t) {
    if (feasibility.coverable(all, t)) {
      minimum = t;
      break;
    }
  }
  if (!minimum) {
    stats.nodes = feasibility.nodes();
    return Solution::no(stats);
  }

  // Least witness of minimum size: at each level take the first candidate
  // (canonical order) after the previous pick that still leaves a cover of
  // the remaining size. With a minimum-size target the unrestricted
  // feasibility test is exact for the index-restricted completion.
  std::vector<Pattern> chosen;
  StringMask covered(universe);
  std::size_t start = 0;
  for (std::size_t level = 0; level < *minimum; ++level) {
    bool picked = false;
    for (std::size_t i = start; i < cands.patterns.size(); ++i) {
      if (cands.cover[i].is_subset_of(covered)) continue;
      StringMask with = covered;
      with |= cands.cover[i];
      StringMask rest = all;
      rest.subtract(with);
      if (feasibility.coverable(rest, *minimum - level - 1)) {
        chosen.push_back(cands.patterns[i]);
        covered = std::move(with);
        start = i + 1;
        picked = true;
        break;
      }
    }
    if (!picked) throw VerificationError("oracle failed to rebuild a minimum witness");
  }
  stats.nodes = feasibility.nodes();
  return Solution::yes(std::move(chosen), stats);
}

}  // namespace patsep
