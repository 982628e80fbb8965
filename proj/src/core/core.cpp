#include "patsep/core.hpp"

#include <algorithm>
#include <set>

namespace patsep {

namespace {

void require_same_length(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size()) {
    throw LengthError("length mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
}

void require_uniform(std::span<const Pattern> xs, std::span<const Pattern> ys) {
  const Pattern* first = !xs.empty() ? &xs.front() : (!ys.empty() ? &ys.front() : nullptr);
  if (first == nullptr) return;
  for (const auto& x : xs) require_same_length(*first, x);
  for (const auto& y : ys) require_same_length(*first, y);
}

std::vector<Pattern> sorted_unique(std::vector<Pattern> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::size_t off_base_count(const Pattern& s, Symbol base) {
  return static_cast<std::size_t>(
      std::count_if(s.cells().begin(), s.cells().end(), [base](Symbol c) { return c != base; }));
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw SymbolError("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.empty()) throw SymbolError("empty symbol token");
    if (t == wildcard_token) throw SymbolError("'*' is reserved for the wildcard");
    if (t.find_first_of(" \t\r\n#") != std::string::npos) {
      throw SymbolError("symbol token '" + t + "' contains whitespace or '#'");
    }
    if (!index_.emplace(t, static_cast<Symbol>(i)).second) {
      throw SymbolError("duplicate symbol '" + t + "'");
    }
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

const std::string& Alphabet::token(Symbol s) const {
  if (!contains(s)) throw SymbolError("symbol index " + std::to_string(s) + " out of range");
  return tokens_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw SymbolError("unknown symbol '" + std::string(token) + "'");
}

bool Pattern::is_concrete() const noexcept {
  return std::find(cells_.begin(), cells_.end(), wildcard) == cells_.end();
}

std::size_t Pattern::count_stars() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), wildcard));
}

Pattern Pattern::with_cell(std::size_t i, Symbol s) const {
  auto cells = cells_;
  cells.at(i) = s;
  return Pattern(std::move(cells));
}

std::size_t PatternHash::operator()(const Pattern& p) const noexcept {
  // FNV-1a over the cells
  std::uint64_t h = 1469598103934665603ULL;
  for (Symbol c : p.cells()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const Pattern& a, const Pattern& b) {
  const auto sa = a.count_stars();
  const auto sb = b.count_stars();
  if (sa != sb) return sa > sb;
  return a < b;
}

void sort_canonical(std::vector<Pattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(), canonical_less);
}

std::string to_string(const Pattern& p, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    out += p[i] == wildcard ? std::string(wildcard_token) : alphabet.token(p[i]);
  }
  return out;
}

bool compatible(const Pattern& p, const Pattern& g) {
  require_same_length(p, g);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != wildcard && p[i] != g[i]) return false;
  }
  return true;
}

bool set_compatible(std::span<const Pattern> patterns, std::span<const Pattern> strings) {
  require_uniform(patterns, strings);
  return std::all_of(strings.begin(), strings.end(), [&](const Pattern& g) {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const Pattern& p) { return compatible(p, g); });
  });
}

bool verify_separation(std::span<const Pattern> patterns, std::span<const Pattern> good,
                       std::span<const Pattern> bad) {
  require_uniform(patterns, good);
  require_uniform(good, bad);
  require_uniform(patterns, bad);
  const std::set<Pattern> good_set(good.begin(), good.end());
  for (const auto& b : bad) {
    if (good_set.count(b) != 0) throw DisjointnessError("a string occurs in both G and B");
  }
  if (!set_compatible(patterns, good)) return false;
  for (const auto& p : patterns) {
    for (const auto& b : bad) {
      if (compatible(p, b)) return false;
    }
  }
  return true;
}

bool is_d_small(const Alphabet& alphabet, std::span<const Pattern> strings, Symbol base,
                std::size_t d) {
  if (!alphabet.contains(base)) throw SymbolError("base symbol is not in the alphabet");
  return std::all_of(strings.begin(), strings.end(),
                     [&](const Pattern& s) { return off_base_count(s, base) <= d; });
}

bool is_exactly_d_small(const Alphabet& alphabet, std::span<const Pattern> strings, Symbol base,
                        std::size_t d) {
  if (!alphabet.contains(base)) throw SymbolError("base symbol is not in the alphabet");
  return std::all_of(strings.begin(), strings.end(),
                     [&](const Pattern& s) { return off_base_count(s, base) == d; });
}

std::size_t count_stars(const Pattern& p) { return p.count_stars(); }
std::size_t count_symbols(const Pattern& p) { return p.count_symbols(); }

bool PatternBounds::admits(const Pattern& p) const noexcept {
  const auto stars = p.count_stars();
  if (max_stars && stars > *max_stars) return false;
  if (max_symbols && p.size() - stars > *max_symbols) return false;
  return true;
}

Instance::Instance(Alphabet alphabet, std::vector<Pattern> good, std::vector<Pattern> bad,
                   std::size_t budget, PatternBounds bounds, std::optional<Smallness> smallness,
                   std::size_t length)
    : alphabet_(std::move(alphabet)),
      good_(sorted_unique(std::move(good))),
      bad_(sorted_unique(std::move(bad))),
      budget_(budget),
      bounds_(bounds),
      smallness_(smallness),
      length_(length) {
  if (!good_.empty()) {
    length_ = good_.front().size();
  } else if (!bad_.empty()) {
    length_ = bad_.front().size();
  }
  for (const auto* block : {&good_, &bad_}) {
    for (const auto& s : *block) {
      if (s.size() != length_) throw LengthError("all strings of G and B must share one length");
      for (Symbol c : s.cells()) {
        if (c == wildcard) throw SymbolError("G and B may not contain the wildcard");
        if (!alphabet_.contains(c)) throw SymbolError("string symbol outside the alphabet");
      }
    }
  }
  std::vector<Pattern> common;
  std::set_intersection(good_.begin(), good_.end(), bad_.begin(), bad_.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw DisjointnessError("string '" + to_string(common.front(), alphabet_) +
                            "' occurs in both G and B");
  }
  if (smallness_) {
    if (!alphabet_.contains(smallness_->base)) {
      throw SymbolError("base symbol is not in the alphabet");
    }
    if (!is_d_small(alphabet_, good_, smallness_->base, smallness_->d) ||
        !is_d_small(alphabet_, bad_, smallness_->base, smallness_->d)) {
      throw SmallnessError("strings are not " + std::to_string(smallness_->d) +
                           "-small with respect to base '" + alphabet_.token(smallness_->base) +
                           "'");
    }
  }
}

Instance Instance::with_budget(std::size_t k) const {
  Instance copy = *this;
  copy.budget_ = k;
  return copy;
}

Instance Instance::with_bounds(PatternBounds bounds) const {
  Instance copy = *this;
  copy.bounds_ = bounds;
  return copy;
}

Instance Instance::with_smallness(std::optional<Smallness> smallness) const {
  return Instance(alphabet_, good_, bad_, budget_, bounds_, smallness, length_);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "YES";
    case Verdict::no:
      return "NO";
    case Verdict::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Solution Solution::yes(std::vector<Pattern> patterns, SolveStats stats) {
  sort_canonical(patterns);
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return Solution{Verdict::yes, std::move(patterns), stats};
}

Solution Solution::no(SolveStats stats) { return Solution{Verdict::no, {}, stats}; }

Solution Solution::unknown(SolveStats stats) { return Solution{Verdict::unknown, {}, stats}; }

bool is_valid_solution(const Instance& inst, const Solution& sol) {
  if (sol.verdict != Verdict::yes) return sol.patterns.empty();
  if (sol.patterns.size() > inst.budget()) return false;
  for (const auto& p : sol.patterns) {
    if (p.size() != inst.length() || !inst.bounds().admits(p)) return false;
    for (Symbol c : p.cells()) {
      if (c != wildcard && !inst.alphabet().contains(c)) return false;
    }
  }
  return verify_separation(sol.patterns, inst.good(), inst.bad());
}

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  if (n_ == 0) throw GraphError("graph needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n_ || v > n_) {
      throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " has a vertex outside 1.." + std::to_string(n_));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || u > n_) return false;
  const auto& nbrs = adjacency_[u - 1];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

}  // namespace patsep
