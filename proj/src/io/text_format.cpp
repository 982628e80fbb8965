#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "patsep/io.hpp"

namespace patsep {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, std::string_view what) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

std::size_t single_count(std::string_view rest, std::size_t line, std::string_view key) {
  const auto tokens = split(rest);
  if (tokens.size() != 1) throw ParseError(line, "'" + std::string(key) + ":' takes one value");
  return parse_count(tokens.front(), line, key);
}

Pattern parse_row(std::string_view text, std::size_t line, const Alphabet& alphabet,
                  bool allow_wildcard) {
  std::vector<Symbol> cells;
  for (auto token : split(text)) {
    if (token == wildcard_token) {
      if (!allow_wildcard) throw ParseError(line, "the wildcard '*' is not allowed in G or B");
      cells.push_back(wildcard);
      continue;
    }
    const auto s = alphabet.find(token);
    if (!s) throw ParseError(line, "unknown symbol '" + std::string(token) + "'");
    cells.push_back(*s);
  }
  return Pattern(std::move(cells));
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> budget, stars, symbols, d, length;
  std::optional<std::string> base;
  std::size_t base_line = 0;

  enum class Block { none, good, bad };
  Block block = Block::none;
  std::vector<Pattern> rows[2];
  std::map<Pattern, std::size_t> first_line[2];
  std::optional<std::size_t> row_length;
  std::vector<Diagnostic> warnings;

  static const std::set<std::string_view> header_keys = {"alphabet", "k", "base", "d",
                                                         "r",        "s", "n"};

  for (const auto& [number, line] : content_lines(text)) {
    const auto colon = line.find(':');
    const auto key = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(0, colon));
    const auto rest = colon == std::string_view::npos ? std::string_view{} : line.substr(colon + 1);

    if (key == "G" || key == "B") {
      if (!alphabet) throw ParseError(number, "'alphabet:' must precede the G and B blocks");
      if (!trim(rest).empty()) throw ParseError(number, "block header takes no values");
      block = key == "G" ? Block::good : Block::bad;
      continue;
    }

    if (block == Block::none) {
      if (header_keys.count(key) == 0) {
        throw ParseError(number, "expected a header line such as 'alphabet:', 'k:' or 'G:'");
      }
      if (key == "alphabet") {
        if (alphabet) throw ParseError(number, "duplicate 'alphabet:' line");
        std::vector<std::string> tokens;
        for (auto t : split(rest)) tokens.emplace_back(t);
        try {
          alphabet.emplace(std::move(tokens));
        } catch (const SymbolError& e) {
          throw ParseError(number, e.what());
        }
      } else if (key == "base") {
        const auto tokens = split(rest);
        if (tokens.size() != 1) throw ParseError(number, "'base:' takes one symbol");
        base = std::string(tokens.front());
        base_line = number;
      } else {
        auto& slot = key == "k" ? budget : key == "r" ? stars : key == "s" ? symbols : key == "d" ? d : length;
        if (slot) throw ParseError(number, "duplicate '" + std::string(key) + ":' line");
        slot = single_count(rest, number, key);
      }
      continue;
    }

    const int which = block == Block::good ? 0 : 1;
    Pattern row = parse_row(line, number, *alphabet, false);
    if (!row_length) row_length = row.size();
    if (row.size() != *row_length) {
      throw LengthError("line " + std::to_string(number) + ": string has length " +
                        std::to_string(row.size()) + ", expected " + std::to_string(*row_length));
    }
    if (auto other = first_line[1 - which].find(row); other != first_line[1 - which].end()) {
      throw DisjointnessError("line " + std::to_string(number) + ": string also appears in " +
                              (which == 0 ? "B" : "G") + " at line " +
                              std::to_string(other->second));
    }
    auto [it, inserted] = first_line[which].emplace(row, number);
    if (!inserted) {
      warnings.push_back({number, "duplicate of line " + std::to_string(it->second) + " in " +
                                      (which == 0 ? "G" : "B") + " dropped"});
      continue;
    }
    rows[which].push_back(std::move(row));
  }

  if (!alphabet) throw ParseError(0, "missing 'alphabet:' line");
  if (!budget) throw ParseError(0, "missing 'k:' line");
  if (base.has_value() != d.has_value()) {
    throw ParseError(base_line, "'base:' and 'd:' must be given together");
  }
  if (row_length && length && *row_length != *length) {
    throw LengthError("'n:' disagrees with the string length");
  }
  std::optional<Smallness> smallness;
  if (base) {
    const auto sym = alphabet->find(*base);
    if (!sym) throw ParseError(base_line, "base symbol '" + *base + "' is not in the alphabet");
    smallness = Smallness{*sym, *d};
  }
  Instance inst(*alphabet, std::move(rows[0]), std::move(rows[1]), *budget,
                PatternBounds{stars, symbols}, smallness, length.value_or(0));
  return InstanceFile{std::move(inst), std::move(warnings)};
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "alphabet: " << join_tokens(inst.alphabet().tokens()) << '\n';
  out << "k: " << inst.budget() << '\n';
  if (inst.bounds().max_stars) out << "r: " << *inst.bounds().max_stars << '\n';
  if (inst.bounds().max_symbols) out << "s: " << *inst.bounds().max_symbols << '\n';
  if (inst.smallness()) {
    out << "base: " << inst.alphabet().token(inst.smallness()->base) << '\n';
    out << "d: " << inst.smallness()->d << '\n';
  }
  if (inst.good().empty() && inst.bad().empty()) out << "n: " << inst.length() << '\n';
  out << "G:\n";
  for (const auto& g : inst.good()) out << to_string(g, inst.alphabet()) << '\n';
  out << "B:\n";
  for (const auto& b : inst.bad()) out << to_string(b, inst.alphabet()) << '\n';
  return out.str();
}

std::vector<Pattern> parse_patterns(std::string_view text, const Alphabet& alphabet) {
  std::vector<Pattern> out;
  for (const auto& [number, line] : content_lines(text)) {
    Pattern p = parse_row(line, number, alphabet, true);
    if (!out.empty() && p.size() != out.front().size()) {
      throw LengthError("line " + std::to_string(number) + ": pattern has length " +
                        std::to_string(p.size()) + ", expected " +
                        std::to_string(out.front().size()));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string serialize_patterns(const std::vector<Pattern>& patterns, const Alphabet& alphabet) {
  std::string out;
  for (const auto& p : patterns) out += to_string(p, alphabet) + '\n';
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const auto header = split(lines.front().text);
  if (header.size() != 2) throw ParseError(lines.front().number, "expected header 'n m'");
  const std::size_t n = parse_count(header[0], lines.front().number, "vertex count");
  const std::size_t m = parse_count(header[1], lines.front().number, "edge count");
  if (n == 0) throw ParseError(lines.front().number, "graph needs at least one vertex");
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) +
                                              " edges, found " + std::to_string(lines.size() - 1));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto tokens = split(line);
    if (tokens.size() != 2) throw ParseError(number, "expected an edge 'u v'");
    Vertex u = parse_count(tokens[0], number, "vertex");
    Vertex v = parse_count(tokens[1], number, "vertex");
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(number, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(number, "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (auto [it, inserted] = seen.emplace(key, number); !inserted) {
      throw ParseError(number, "duplicate edge, first given on line " + std::to_string(it->second));
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& graph) {
  std::ostringstream out;
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace patsep
