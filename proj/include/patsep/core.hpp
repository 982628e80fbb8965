#pragma once

// Domain types for pattern identification: alphabets, wildcard patterns,
// instances (G, B, k and optional bounds), solutions and simple graphs.
//
// Symbols are indices into an Alphabet. The wildcard is the largest Symbol
// value, so plain lexicographic comparison of cells already sorts it last.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "patsep/errors.hpp"

namespace patsep {

using Symbol = std::uint32_t;

inline constexpr Symbol wildcard = std::numeric_limits<Symbol>::max();
inline constexpr std::string_view wildcard_token = "*";

class Alphabet {
 public:
  /// Throws SymbolError on empty, duplicate or reserved tokens.
  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet binary();  // {0, 1}

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(Symbol s) const;

  std::optional<Symbol> find(std::string_view token) const;
  /// Like find, but throws SymbolError for unknown tokens.
  Symbol symbol(std::string_view token) const;

  bool contains(Symbol s) const noexcept { return s < tokens_.size(); }

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Fixed-length sequence over the alphabet plus the wildcard. A pattern
/// without wildcards is a concrete string.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Symbol> cells) : cells_(std::move(cells)) {}

  static Pattern all_wildcards(std::size_t length) {
    return Pattern(std::vector<Symbol>(length, wildcard));
  }

  std::size_t size() const noexcept { return cells_.size(); }
  Symbol operator[](std::size_t i) const { return cells_[i]; }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  bool is_concrete() const noexcept;
  std::size_t count_stars() const noexcept;
  std::size_t count_symbols() const noexcept { return size() - count_stars(); }

  Pattern with_cell(std::size_t i, Symbol s) const;

  // Plain lexicographic order on cells (wildcard last).
  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<Symbol> cells_;
};

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept;
};

/// Canonical order used for witnesses and branching: more wildcards first,
/// then lexicographic by alphabet order with the wildcard last.
bool canonical_less(const Pattern& a, const Pattern& b);

void sort_canonical(std::vector<Pattern>& patterns);

/// Space separated tokens, e.g. "1 * * * *".
std::string to_string(const Pattern& p, const Alphabet& alphabet);

/// p -> g: every non-wildcard cell of p equals the cell of g.
bool compatible(const Pattern& p, const Pattern& g);

/// P -> G: every g in G is matched by some p in P.
bool set_compatible(std::span<const Pattern> patterns, std::span<const Pattern> strings);

/// P -> (G, B). Throws DisjointnessError when G and B share a string.
bool verify_separation(std::span<const Pattern> patterns, std::span<const Pattern> good,
                       std::span<const Pattern> bad);

/// At most d cells differ from `base` in every string. Throws SymbolError when
/// base is not in the alphabet.
bool is_d_small(const Alphabet& alphabet, std::span<const Pattern> strings, Symbol base,
                std::size_t d);

/// Strict reading: exactly d cells differ from `base` in every string.
bool is_exactly_d_small(const Alphabet& alphabet, std::span<const Pattern> strings, Symbol base,
                        std::size_t d);

std::size_t count_stars(const Pattern& p);
std::size_t count_symbols(const Pattern& p);

struct PatternBounds {
  std::optional<std::size_t> max_stars;    // r
  std::optional<std::size_t> max_symbols;  // s

  bool active() const noexcept { return max_stars || max_symbols; }
  bool admits(const Pattern& p) const noexcept;

  bool operator==(const PatternBounds&) const = default;
};

struct Smallness {
  Symbol base = 0;
  std::size_t d = 0;

  bool operator==(const Smallness&) const = default;
};

/// (Sigma, G, B, k) with optional pattern bounds and smallness. G and B are
/// stored deduplicated and sorted; the instance is immutable once built.
class Instance {
 public:
  /// Validates alphabet membership, uniform length, disjointness and, when
  /// present, smallness. `length` is only consulted when G and B are empty.
  Instance(Alphabet alphabet, std::vector<Pattern> good, std::vector<Pattern> bad,
           std::size_t budget, PatternBounds bounds = {}, std::optional<Smallness> smallness = {},
           std::size_t length = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Pattern>& good() const noexcept { return good_; }
  const std::vector<Pattern>& bad() const noexcept { return bad_; }
  std::size_t budget() const noexcept { return budget_; }
  const PatternBounds& bounds() const noexcept { return bounds_; }
  const std::optional<Smallness>& smallness() const noexcept { return smallness_; }
  std::size_t length() const noexcept { return length_; }

  Instance with_budget(std::size_t k) const;
  Instance with_bounds(PatternBounds bounds) const;
  Instance with_smallness(std::optional<Smallness> smallness) const;

  bool operator==(const Instance&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Pattern> good_;
  std::vector<Pattern> bad_;
  std::size_t budget_;
  PatternBounds bounds_;
  std::optional<Smallness> smallness_;
  std::size_t length_;
};

enum class Verdict { yes, no, unknown };

std::string_view to_string(Verdict v);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  /// Size of the cover built by approximate solvers, even when not a YES.
  std::optional<std::size_t> approximate_size;
};

struct Solution {
  Verdict verdict = Verdict::no;
  std::vector<Pattern> patterns;  // canonical order; non-empty only for YES
  SolveStats stats;

  std::size_t certificate_size() const noexcept { return patterns.size(); }

  static Solution yes(std::vector<Pattern> patterns, SolveStats stats = {});
  static Solution no(SolveStats stats = {});
  static Solution unknown(SolveStats stats = {});
};

/// A YES solution is valid when it separates, fits the budget and respects
/// the instance bounds. NO/UNKNOWN solutions are trivially consistent.
bool is_valid_solution(const Instance& inst, const Solution& sol);

using Vertex = std::size_t;  // 1-based

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  /// Throws GraphError on n == 0, self-loops, duplicates or out-of-range ids.
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted, each pair with first < second.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t max_degree() const;

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace patsep
