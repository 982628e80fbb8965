#pragma once

// Graph problems encoded as pattern identification instances, the mappings
// from pattern witnesses back to graph certificates, and the conversions
// between separating feature sets and pattern sets.

#include <cstddef>
#include <set>
#include <vector>

#include "patsep/core.hpp"

namespace patsep {

/// Dominating set -> PI. One string per vertex with 1 on its closed
/// neighbourhood, B = {0^n}, alphabet {0, 1}.
Instance ds_to_pi(const Graph& graph, std::size_t k);

/// Least position carrying 1 in each pattern. Throws VerificationError
/// unless the result dominates the graph.
std::set<Vertex> pi_solution_to_ds(const Graph& graph, const Solution& sol);

/// Vertex cover -> PI. One string per edge with 1 at both endpoints,
/// B = {0^n}, alphabet {0, 1}.
Instance vc_to_pi(const Graph& graph, std::size_t k);

/// Least vertex carrying 1 in each pattern. Throws VerificationError unless
/// the result covers every edge.
std::set<Vertex> pi_solution_to_vc(const Graph& graph, const Solution& sol);

/// Proper vertex colouring with colours 1..colors.
struct Coloring {
  std::vector<std::size_t> color_of;  // indexed by vertex - 1
  std::size_t colors = 0;

  std::size_t color(Vertex v) const { return color_of.at(v - 1); }
  bool is_proper(const Graph& graph) const;
};

/// Greedy first-fit colouring in vertex order; uses at most max_degree + 1
/// colours.
Coloring color_graph(const Graph& graph);

/// Same assignment with room for at least `colors` colours (extra colours
/// unused). Lets callers fix the string length of pvc_to_pis.
Coloring pad_colors(Coloring coloring, std::size_t colors);

/// Symbol token for vertex i of the coloured reduction ("σi").
std::string sigma_token(std::size_t i);

/// Coloured vertex cover -> small-string PI. Alphabet σ1..σ(n+1), one string
/// of length `coloring.colors` per edge ij carrying σi at column C(i), σj at
/// C(j) and σ(n+1) elsewhere; B = {σ(n+1)^c}; 2-small w.r.t. σ(n+1).
/// Throws ColoringError if the colouring is not proper.
Instance pvc_to_pis(const Graph& graph, std::size_t k, const Coloring& coloring);

/// Vertex i is taken when p[C(i)] = σi, least such vertex per pattern.
/// Throws VerificationError unless the result covers every edge.
std::set<Vertex> pis_solution_to_vc(const Graph& graph, const Coloring& coloring,
                                    const Solution& sol);

bool is_dominating_set(const Graph& graph, const std::set<Vertex>& vertices);
bool is_vertex_cover(const Graph& graph, const std::set<Vertex>& vertices);

/// Column indices (0-based) on which every good/bad pair differs somewhere.
struct FeatureSet {
  std::set<std::size_t> indices;

  bool operator==(const FeatureSet&) const = default;
};

bool is_separating_feature_set(const Instance& inst, const FeatureSet& features);

/// One pattern per g: g on the feature columns, wildcard elsewhere.
/// Throws FeatureSetError if the features do not separate G from B.
std::vector<Pattern> feature_set_to_patterns(const Instance& inst, const FeatureSet& features);

/// Union of the concrete positions of P. Throws VerificationError if P does
/// not separate G from B.
FeatureSet patterns_to_feature_set(const Instance& inst, const std::vector<Pattern>& patterns);

}  // namespace patsep
