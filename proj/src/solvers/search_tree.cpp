#include <algorithm>
#include <optional>

#include "patsep/solvers.hpp"

namespace patsep {

namespace {

// Shared state of the two bounded search trees. Branches at a node are the
// admissible patterns of the least uncovered good string.
class TreeSearch {
 public:
  TreeSearch(const Instance& inst, const SolverOptions& options)
      : inst_(inst), options_(options), branches_(inst.good().size()) {}

  const std::vector<Pattern>& branches(std::size_t gi) {
    auto& slot = branches_[gi];
    if (!slot) {
      const auto& g = inst_.good()[gi];
      if (g.size() >= 63 || (std::uint64_t{1} << g.size()) > options_.candidate_cap) {
        throw ResourceLimit("branching factor 2^" + std::to_string(g.size()) +
                            " exceeds the candidate cap");
      }
      std::vector<Pattern> keep;
      for (auto& p : patterns_over(g)) {
        if (!inst_.bounds().admits(p)) continue;
        const bool hits_bad = std::any_of(inst_.bad().begin(), inst_.bad().end(),
                                          [&](const Pattern& b) { return compatible(p, b); });
        if (!hits_bad) keep.push_back(std::move(p));
      }
      slot = std::move(keep);
    }
    return *slot;
  }

  StringMask remaining_after(const StringMask& uncovered, const Pattern& p) const {
    StringMask next = uncovered;
    const auto& good = inst_.good();
    for (std::size_t h = 0; h < good.size(); ++h) {
      if (uncovered.test(h) && compatible(p, good[h])) next.reset(h);
    }
    return next;
  }

  void visit() {
    if (++nodes_ > options_.node_budget) {
      throw ResourceLimit("search tree exceeded the node budget of " +
                          std::to_string(options_.node_budget));
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  const Instance& inst_;
  const SolverOptions& options_;
  std::vector<std::optional<std::vector<Pattern>>> branches_;
  std::uint64_t nodes_ = 0;
};

bool search_depth_k(TreeSearch& tree, const StringMask& uncovered, std::size_t depth_left,
                    std::vector<Pattern>& chosen) {
  tree.visit();
  if (uncovered.none()) return true;
  if (depth_left == 0) return false;
  const std::size_t gi = uncovered.first();
  for (const auto& p : tree.branches(gi)) {
    chosen.push_back(p);
    if (search_depth_k(tree, tree.remaining_after(uncovered, p), depth_left - 1, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

void search_all(TreeSearch& tree, const StringMask& uncovered, std::vector<Pattern>& chosen,
                std::vector<Pattern>& best, std::size_t& best_size) {
  tree.visit();
  if (uncovered.none()) {
    if (chosen.size() < best_size) {
      best = chosen;
      best_size = chosen.size();
    }
    return;
  }
  // any completion needs at least one more pattern
  if (chosen.size() + 1 >= best_size) return;
  const std::size_t gi = uncovered.first();
  for (const auto& p : tree.branches(gi)) {
    chosen.push_back(p);
    search_all(tree, tree.remaining_after(uncovered, p), chosen, best, best_size);
    chosen.pop_back();
  }
}

}  // namespace

Solution solve_search_tree_k(const Instance& inst, const SolverOptions& options) {
  TreeSearch tree(inst, options);
  std::vector<Pattern> chosen;
  const bool found =
      search_depth_k(tree, StringMask::full(inst.good().size()), inst.budget(), chosen);
  SolveStats stats;
  stats.nodes = tree.nodes();
  return found ? Solution::yes(std::move(chosen), stats) : Solution::no(stats);
}

Solution solve_search_tree_g(const Instance& inst, const SolverOptions& options) {
  TreeSearch tree(inst, options);
  std::vector<Pattern> chosen;
  std::vector<Pattern> best;
  std::size_t best_size = inst.good().size() + 1;
  search_all(tree, StringMask::full(inst.good().size()), chosen, best, best_size);
  SolveStats stats;
  stats.nodes = tree.nodes();
  if (best_size <= inst.good().size() && best_size <= inst.budget()) {
    return Solution::yes(std::move(best), stats);
  }
  return Solution::no(stats);
}

}  // namespace patsep
