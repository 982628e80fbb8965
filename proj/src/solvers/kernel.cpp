#include <algorithm>
#include <set>

#include "patsep/solvers.hpp"

namespace patsep {

KernelResult kernelize_small(const Instance& inst) {
  if (!inst.smallness()) {
    throw SmallnessError("kernelization needs a base symbol and a smallness bound d");
  }
  const Smallness small = *inst.smallness();
  const std::size_t n = inst.length();
  const auto& alphabet = inst.alphabet();

  std::vector<const Pattern*> all;
  for (const auto& g : inst.good()) all.push_back(&g);
  for (const auto& b : inst.bad()) all.push_back(&b);

  std::vector<std::size_t> kept;
  std::vector<Symbol> fill(n, wildcard);
  std::set<Symbol> used;
  for (std::size_t col = 0; col < n; ++col) {
    const Symbol first = all.empty() ? small.base : (*all.front())[col];
    const bool uniform = std::all_of(all.begin(), all.end(),
                                     [&](const Pattern* s) { return (*s)[col] == first; });
    if (uniform) {
      fill[col] = first;
    } else {
      kept.push_back(col);
      for (const auto* s : all) used.insert((*s)[col]);
    }
  }

  KernelResult kr{inst, inst, kept, {}, fill, {}, used.size(), false};

  used.insert(small.base);
  std::vector<Symbol> to_kernel(alphabet.size(), wildcard);
  for (Symbol s : used) {
    to_kernel[s] = static_cast<Symbol>(kr.symbol_map.size());
    kr.symbol_map.push_back(s);
    kr.kept_symbols.push_back(alphabet.token(s));
  }

  auto project = [&](const std::vector<Pattern>& block) {
    std::vector<Pattern> out;
    out.reserve(block.size());
    for (const auto& s : block) {
      std::vector<Symbol> cells;
      cells.reserve(kept.size());
      for (std::size_t col : kept) cells.push_back(to_kernel[s[col]]);
      out.emplace_back(std::move(cells));
    }
    return out;
  };

  std::size_t budget = inst.budget();
  const auto& bounds = inst.bounds();
  // every pattern has stars + symbols = n, so r + s < n admits nothing
  if (bounds.max_stars && bounds.max_symbols && *bounds.max_stars + *bounds.max_symbols < n) {
    kr.bounds_infeasible = true;
    budget = 0;
  }

  kr.kernel = Instance(Alphabet(kr.kept_symbols), project(inst.good()), project(inst.bad()), budget,
                       bounds, Smallness{to_kernel[small.base], small.d}, kept.size());
  return kr;
}

Solution lift_solution(const KernelResult& kr, const Solution& sol) {
  if (sol.verdict != Verdict::yes) return sol;
  const Instance& original = kr.original;
  const auto& bounds = original.bounds();
  const std::size_t n = original.length();
  const std::size_t dropped = n - kr.kept_columns.size();

  std::vector<Pattern> lifted;
  lifted.reserve(sol.patterns.size());
  for (const auto& kp : sol.patterns) {
    if (kp.size() != kr.kept_columns.size()) {
      throw LengthError("kernel pattern length does not match the kernel");
    }
    // Dropped columns become wildcards, except under a star bound where they
    // take the shared symbol; with both bounds only as many wildcards as the
    // symbol bound forces.
    std::size_t stars_left = dropped;
    if (bounds.max_stars) {
      stars_left = 0;
      if (bounds.max_symbols && kp.count_symbols() + dropped > *bounds.max_symbols) {
        stars_left = kp.count_symbols() + dropped - *bounds.max_symbols;
      }
    }
    std::vector<Symbol> cells(n);
    std::size_t next_kept = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (next_kept < kr.kept_columns.size() && kr.kept_columns[next_kept] == col) {
        const Symbol s = kp[next_kept++];
        cells[col] = s == wildcard ? wildcard : kr.symbol_map.at(s);
      } else if (stars_left > 0) {
        cells[col] = wildcard;
        --stars_left;
      } else {
        cells[col] = kr.dropped_fill[col];
      }
    }
    lifted.emplace_back(std::move(cells));
  }

  Solution out = Solution::yes(std::move(lifted), sol.stats);
  if (!is_valid_solution(original, out)) {
    throw VerificationError("lifted kernel solution does not solve the original instance");
  }
  return out;
}

Solution solve_kernel_oracle(const Instance& inst, const SolverOptions& options) {
  const KernelResult kr = kernelize_small(inst);
  return lift_solution(kr, solve_oracle(kr.kernel, options));
}

}  // namespace patsep
