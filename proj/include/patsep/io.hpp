#pragma once

// Text formats (instances, pattern lists, graphs), seeded instance
// generation and solver run reports.
//
// Instance file:
//
//   # comment
//   alphabet: 0 1
//   k: 1
//   base: 0        (optional, together with d)
//   d: 4
//   r: 2           (optional, max wildcards per pattern)
//   s: 3           (optional, max symbols per pattern)
//   G:
//   1 1 1 0 0
//   B:
//   0 0 0 0 0
//
// Graph file: header "n m" followed by m lines "u v", vertices 1..n.
// Pattern file: one pattern per line, "*" for the wildcard.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "patsep/core.hpp"
#include "patsep/solvers.hpp"

namespace patsep {

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct InstanceFile {
  Instance instance;
  std::vector<Diagnostic> warnings;
};

/// Throws ParseError (with line), LengthError, DisjointnessError,
/// SymbolError or SmallnessError.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

std::vector<Pattern> parse_patterns(std::string_view text, const Alphabet& alphabet);
std::string serialize_patterns(const std::vector<Pattern>& patterns, const Alphabet& alphabet);

/// Throws ParseError naming the line for self-loops, duplicate edges and
/// vertices out of range.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

struct GenerateOptions {
  std::uint64_t seed = 0;
  std::size_t length = 0;
  std::size_t alphabet_size = 2;
  std::size_t good = 0;
  std::size_t bad = 0;
  std::size_t budget = 1;
  /// When set, every string is d-small w.r.t. symbol `base` (index into the
  /// generated alphabet "0", "1", ...).
  std::optional<std::size_t> d;
  Symbol base = 0;
};

/// Seeded, reproducible; G and B disjoint. Throws std::invalid_argument when
/// more strings are requested than exist.
Instance gen_random(const GenerateOptions& options);

struct KernelStats {
  std::size_t original_length = 0;
  std::size_t kernel_length = 0;
  std::size_t original_alphabet = 0;
  std::size_t kernel_alphabet = 0;
  std::vector<std::size_t> kept_columns;  // 0-based
};

struct RunReport {
  std::string algorithm;
  Verdict verdict = Verdict::unknown;
  std::vector<Pattern> witness;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  std::optional<std::size_t> approximate_size;
  double wall_ms = 0.0;
  std::optional<KernelStats> kernel;
  std::vector<std::string> notes;
};

RunReport make_report(std::string algorithm, const Solution& sol, double wall_ms);

/// Lines starting with '#' carry metadata; the remaining lines are the
/// witness, so the text report is itself a valid pattern file.
std::string report_to_text(const RunReport& report, const Alphabet& alphabet);
nlohmann::json report_to_json(const RunReport& report, const Alphabet& alphabet);

}  // namespace patsep
