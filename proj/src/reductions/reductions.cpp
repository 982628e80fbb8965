#include "patsep/reductions.hpp"

#include <algorithm>

namespace patsep {

namespace {

constexpr Symbol zero = 0;
constexpr Symbol one = 1;

void require_length(const Graph& graph, const Solution& sol, std::size_t length) {
  for (const auto& p : sol.patterns) {
    if (p.size() != length) {
      throw LengthError("pattern length " + std::to_string(p.size()) + " does not match " +
                        std::to_string(length) + " for a graph on " +
                        std::to_string(graph.vertex_count()) + " vertices");
    }
  }
}

std::optional<Vertex> least_one(const Pattern& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == one) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

Instance ds_to_pi(const Graph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count();
  std::vector<Pattern> good;
  for (Vertex i = 1; i <= n; ++i) {
    std::vector<Symbol> cells(n, zero);
    cells[i - 1] = one;
    for (Vertex j : graph.neighbors(i)) cells[j - 1] = one;
    good.emplace_back(std::move(cells));
  }
  return Instance(Alphabet::binary(), std::move(good), {Pattern(std::vector<Symbol>(n, zero))}, k);
}

std::set<Vertex> pi_solution_to_ds(const Graph& graph, const Solution& sol) {
  require_length(graph, sol, graph.vertex_count());
  std::set<Vertex> out;
  for (const auto& p : sol.patterns) {
    if (auto v = least_one(p)) out.insert(*v);
  }
  if (!is_dominating_set(graph, out)) {
    throw VerificationError("extracted vertex set does not dominate the graph");
  }
  return out;
}

Instance vc_to_pi(const Graph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count();
  std::vector<Pattern> good;
  for (auto [u, v] : graph.edges()) {
    std::vector<Symbol> cells(n, zero);
    cells[u - 1] = one;
    cells[v - 1] = one;
    good.emplace_back(std::move(cells));
  }
  return Instance(Alphabet::binary(), std::move(good), {Pattern(std::vector<Symbol>(n, zero))}, k);
}

std::set<Vertex> pi_solution_to_vc(const Graph& graph, const Solution& sol) {
  require_length(graph, sol, graph.vertex_count());
  std::set<Vertex> out;
  for (const auto& p : sol.patterns) {
    if (auto v = least_one(p)) out.insert(*v);
  }
  if (!is_vertex_cover(graph, out)) {
    throw VerificationError("extracted vertex set does not cover every edge");
  }
  return out;
}

bool Coloring::is_proper(const Graph& graph) const {
  if (color_of.size() != graph.vertex_count()) return false;
  for (auto c : color_of) {
    if (c < 1 || c > colors) return false;
  }
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const auto& e) { return color(e.first) != color(e.second); });
}

Coloring color_graph(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  Coloring out{std::vector<std::size_t>(n, 0), 0};
  std::vector<bool> taken;
  for (Vertex v = 1; v <= n; ++v) {
    taken.assign(graph.neighbors(v).size() + 2, false);
    for (Vertex u : graph.neighbors(v)) {
      const auto c = out.color_of[u - 1];
      if (c != 0 && c < taken.size()) taken[c] = true;
    }
    std::size_t c = 1;
    while (taken[c]) ++c;
    out.color_of[v - 1] = c;
    out.colors = std::max(out.colors, c);
  }
  return out;
}

Coloring pad_colors(Coloring coloring, std::size_t colors) {
  coloring.colors = std::max(coloring.colors, colors);
  return coloring;
}

std::string sigma_token(std::size_t i) { return "σ" + std::to_string(i); }

Instance pvc_to_pis(const Graph& graph, std::size_t k, const Coloring& coloring) {
  if (!coloring.is_proper(graph)) throw ColoringError("colouring is not proper for the graph");
  const std::size_t n = graph.vertex_count();
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= n + 1; ++i) tokens.push_back(sigma_token(i));
  // symbol index of σi is i - 1
  const auto filler = static_cast<Symbol>(n);
  const std::size_t length = coloring.colors;

  std::vector<Pattern> good;
  for (auto [u, v] : graph.edges()) {
    std::vector<Symbol> cells(length, filler);
    cells[coloring.color(u) - 1] = static_cast<Symbol>(u - 1);
    cells[coloring.color(v) - 1] = static_cast<Symbol>(v - 1);
    good.emplace_back(std::move(cells));
  }
  std::vector<Pattern> bad{Pattern(std::vector<Symbol>(length, filler))};
  return Instance(Alphabet(std::move(tokens)), std::move(good), std::move(bad), k, {},
                  Smallness{filler, 2}, length);
}

std::set<Vertex> pis_solution_to_vc(const Graph& graph, const Coloring& coloring,
                                    const Solution& sol) {
  if (!coloring.is_proper(graph)) throw ColoringError("colouring is not proper for the graph");
  require_length(graph, sol, coloring.colors);
  std::set<Vertex> out;
  for (const auto& p : sol.patterns) {
    for (Vertex i = 1; i <= graph.vertex_count(); ++i) {
      if (p[coloring.color(i) - 1] == static_cast<Symbol>(i - 1)) {
        out.insert(i);
        break;
      }
    }
  }
  if (!is_vertex_cover(graph, out)) {
    throw VerificationError("extracted vertex set does not cover every edge");
  }
  return out;
}

bool is_dominating_set(const Graph& graph, const std::set<Vertex>& vertices) {
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
    if (vertices.count(v) != 0) continue;
    const auto& nbrs = graph.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return vertices.count(u) != 0; })) {
      return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Graph& graph, const std::set<Vertex>& vertices) {
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const auto& e) {
    return vertices.count(e.first) != 0 || vertices.count(e.second) != 0;
  });
}

bool is_separating_feature_set(const Instance& inst, const FeatureSet& features) {
  for (std::size_t i : features.indices) {
    if (i >= inst.length()) return false;
  }
  for (const auto& g : inst.good()) {
    for (const auto& b : inst.bad()) {
      const bool differs = std::any_of(features.indices.begin(), features.indices.end(),
                                       [&](std::size_t i) { return g[i] != b[i]; });
      if (!differs) return false;
    }
  }
  return true;
}

std::vector<Pattern> feature_set_to_patterns(const Instance& inst, const FeatureSet& features) {
  if (!is_separating_feature_set(inst, features)) {
    throw FeatureSetError("feature set does not separate G from B");
  }
  std::vector<Pattern> out;
  for (const auto& g : inst.good()) {
    std::vector<Symbol> cells(inst.length(), wildcard);
    for (std::size_t i : features.indices) cells[i] = g[i];
    out.emplace_back(std::move(cells));
  }
  sort_canonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FeatureSet patterns_to_feature_set(const Instance& inst, const std::vector<Pattern>& patterns) {
  if (!verify_separation(patterns, inst.good(), inst.bad())) {
    throw VerificationError("patterns do not separate G from B");
  }
  FeatureSet out;
  for (const auto& p : patterns) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != wildcard) out.indices.insert(i);
    }
  }
  return out;
}

}  // namespace patsep
