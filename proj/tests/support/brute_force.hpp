#pragma once

// Test-only reference procedures, deliberately independent of the library
// solvers: they enumerate every pattern over Sigma ∪ {*} (not only the
// patterns derived from G) and solve set cover by DP over subsets of G.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "patsep/core.hpp"

namespace patsep::testing {

/// Minimum number of admissible, B-avoiding patterns covering G, or nullopt
/// when no number suffices. Requires |G| <= 16 and (|Sigma|+1)^n small.
inline std::optional<std::size_t> brute_force_optimum(const Instance& inst) {
  const auto& good = inst.good();
  const auto& bad = inst.bad();
  const std::size_t n = inst.length();
  const std::size_t sigma = inst.alphabet().size();
  const std::size_t full = (std::size_t{1} << good.size()) - 1;

  std::set<std::uint32_t> covers;
  std::vector<Symbol> cells(n, 0);
  // odometer over (sigma + 1)^n, digit sigma meaning wildcard
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      cells[i] = digit[i] == sigma ? wildcard : static_cast<Symbol>(digit[i]);
    }
    const Pattern p(cells);
    if (inst.bounds().admits(p)) {
      bool hits_bad = false;
      for (const auto& b : bad) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = p[i] == wildcard || p[i] == b[i];
        hits_bad = hits_bad || match;
      }
      if (!hits_bad) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < good.size(); ++j) {
          bool match = true;
          for (std::size_t i = 0; i < n && match; ++i) {
            match = p[i] == wildcard || p[i] == good[j][i];
          }
          if (match) mask |= 1U << j;
        }
        if (mask != 0) covers.insert(mask);
      }
    }
    std::size_t i = 0;
    while (i < n && ++digit[i] == sigma + 1) digit[i++] = 0;
    if (i == n) break;
  }

  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dp(full + 1, inf);
  dp[0] = 0;
  for (std::size_t mask = 0; mask <= full; ++mask) {
    if (dp[mask] == inf) continue;
    for (auto c : covers) {
      auto& next = dp[mask | c];
      next = std::min(next, dp[mask] + 1);
    }
  }
  if (dp[full] == inf) return std::nullopt;
  return dp[full];
}

inline bool brute_force_yes(const Instance& inst) {
  const auto opt = brute_force_optimum(inst);
  return opt && *opt <= inst.budget();
}

/// Smallest vertex set satisfying pred, by subset enumeration.
template <class Pred>
std::size_t smallest_subset(std::size_t n, Pred pred) {
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best && pred(mask)) best = size;
  }
  return best;
}

inline std::size_t domination_number(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return smallest_subset(n, [&](std::uint32_t mask) {
    for (Vertex v = 1; v <= n; ++v) {
      bool dominated = (mask >> (v - 1)) & 1U;
      for (Vertex u : g.neighbors(v)) dominated = dominated || ((mask >> (u - 1)) & 1U);
      if (!dominated) return false;
    }
    return true;
  });
}

inline std::size_t vertex_cover_number(const Graph& g) {
  return smallest_subset(g.vertex_count(), [&](std::uint32_t mask) {
    for (auto [u, v] : g.edges()) {
      if (!((mask >> (u - 1)) & 1U) && !((mask >> (v - 1)) & 1U)) return false;
    }
    return true;
  });
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// Every labelled graph on n vertices, indexed by the edge bitmask.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// Parses "1 * 0" style rows (single-character tokens) against an alphabet.
inline Pattern row(const Alphabet& alphabet, std::string_view text) {
  std::vector<Symbol> cells;
  for (char c : text) {
    if (c == ' ') continue;
    cells.push_back(c == '*' ? wildcard : alphabet.symbol(std::string(1, c)));
  }
  return Pattern(std::move(cells));
}

inline std::vector<Pattern> rows(const Alphabet& alphabet, std::initializer_list<std::string_view> texts) {
  std::vector<Pattern> out;
  for (auto t : texts) out.push_back(row(alphabet, t));
  return out;
}

/// Worked example graph: 5 vertices, edges 12 13 14 15 23 45.
inline Graph figure_graph() { return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}}); }

}  // namespace patsep::testing
