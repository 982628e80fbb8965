#pragma once

// Exact, fixed-parameter and approximate solvers for pattern identification,
// the small-string kernel, and the candidate machinery they share.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patsep/core.hpp"
#include "patsep/string_mask.hpp"

namespace patsep {

struct SolverOptions {
  /// Cap on |G| * 2^n, the number of patterns enumerated before filtering.
  std::uint64_t candidate_cap = 100'000;
  /// Cap on search nodes (tree search nodes, exact-cover recursion calls).
  std::uint64_t node_budget = 10'000'000;
};

/// Patterns derived from some g in G by starring a subset of cells, that hit
/// no string of B and respect the instance bounds. Canonical order.
struct CandidateSet {
  std::vector<Pattern> patterns;
  /// cover[i] marks the strings of inst.good() matched by patterns[i].
  std::vector<StringMask> cover;
  /// Patterns generated before B/bounds filtering and deduplication.
  std::uint64_t generated = 0;
};

/// Throws ResourceLimit when |G| * 2^n exceeds the candidate cap.
CandidateSet enumerate_candidates(const Instance& inst, const SolverOptions& options = {});

/// Every pattern compatible with g (each cell g[i] or *), canonical order.
std::vector<Pattern> patterns_over(const Pattern& g);

/// Reference exact solver: minimum exact cover over the candidate set.
/// Answers with the least minimum witness in canonical sequence order.
Solution solve_oracle(const Instance& inst, const SolverOptions& options = {});

/// Bounded search tree of depth k branching over patterns of the least
/// uncovered good string.
Solution solve_search_tree_k(const Instance& inst, const SolverOptions& options = {});

/// Bounded search tree of depth |G|; keeps the smallest pattern set found and
/// answers YES iff it fits the budget.
Solution solve_search_tree_g(const Instance& inst, const SolverOptions& options = {});

/// Greedy set cover over the candidate set. YES when the cover fits k, NO when
/// it exceeds (1 + ln|G|) * k, UNKNOWN otherwise. Throws InfeasibleError when
/// a good string has no admissible candidate.
Solution solve_greedy_setcover(const Instance& inst, const SolverOptions& options = {});

struct KernelResult {
  Instance kernel;
  Instance original;
  /// Original (0-based) column of each kernel column.
  std::vector<std::size_t> kept_columns;
  /// Tokens of the kernel alphabet, in original alphabet order.
  std::vector<std::string> kept_symbols;
  /// Per original column: the symbol shared by every string when the column
  /// was dropped, wildcard when kept.
  std::vector<Symbol> dropped_fill;
  /// Kernel symbol index -> original symbol index.
  std::vector<Symbol> symbol_map;
  /// Distinct symbols occurring on kept columns (excluding a base that only
  /// joins the alphabet as the designated symbol).
  std::size_t observed_symbols = 0;
  /// Set when the pattern bounds admit no pattern at all; the kernel budget is
  /// then forced to 0.
  bool bounds_infeasible = false;
};

/// Drops every column on which all strings of G and B agree and restricts the
/// alphabet to the surviving symbols plus the base. Throws SmallnessError
/// unless the instance carries a smallness annotation.
KernelResult kernelize_small(const Instance& inst);

/// Maps a kernel solution back onto the original columns and re-verifies it.
/// Throws VerificationError if the lifted set does not solve the original.
Solution lift_solution(const KernelResult& kr, const Solution& sol);

/// kernelize_small, solve_oracle on the kernel, lift_solution.
Solution solve_kernel_oracle(const Instance& inst, const SolverOptions& options = {});

/// NO when |G| > k * |Sigma|^r for the instance's star bound r; otherwise no
/// verdict. Also no verdict when r is unset.
std::optional<Verdict> pips_bound_check(const Instance& inst);

/// |Sigma|^n, or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> trivial_kernel_count(std::size_t alphabet_size, std::size_t length);
std::optional<std::uint64_t> trivial_kernel_count(const Instance& inst);

}  // namespace patsep
