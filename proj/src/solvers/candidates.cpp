#include <algorithm>
#include <unordered_set>

#include "patsep/solvers.hpp"

namespace patsep {

namespace {

constexpr std::size_t max_enumerable_length = 62;

bool hits_any(const Pattern& p, const std::vector<Pattern>& strings) {
  return std::any_of(strings.begin(), strings.end(),
                     [&](const Pattern& s) { return compatible(p, s); });
}

}  // namespace

std::vector<Pattern> patterns_over(const Pattern& g) {
  const std::size_t n = g.size();
  if (n > max_enumerable_length) {
    throw ResourceLimit("string length " + std::to_string(n) + " is too long to enumerate");
  }
  std::vector<Pattern> out;
  out.reserve(std::size_t{1} << n);
  std::vector<Symbol> cells(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) cells[i] = (mask >> i) & 1U ? wildcard : g[i];
    out.emplace_back(cells);
  }
  sort_canonical(out);
  return out;
}

CandidateSet enumerate_candidates(const Instance& inst, const SolverOptions& options) {
  CandidateSet result;
  const auto& good = inst.good();
  const auto& bad = inst.bad();
  if (good.empty()) return result;

  const std::size_t n = inst.length();
  if (n > max_enumerable_length ||
      (std::uint64_t{1} << n) > options.candidate_cap / good.size()) {
    throw ResourceLimit("candidate enumeration |G|*2^n exceeds the cap of " +
                        std::to_string(options.candidate_cap));
  }

  std::unordered_set<Pattern, PatternHash> seen;
  std::unordered_set<Pattern, PatternHash> rejected;
  std::vector<Symbol> cells(n);
  for (const auto& g : good) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) cells[i] = (mask >> i) & 1U ? wildcard : g[i];
      Pattern p(cells);
      ++result.generated;
      if (!inst.bounds().admits(p) || seen.count(p) != 0 || rejected.count(p) != 0) continue;
      if (hits_any(p, bad)) {
        rejected.insert(std::move(p));
      } else {
        seen.insert(std::move(p));
      }
    }
  }

  result.patterns.assign(seen.begin(), seen.end());
  sort_canonical(result.patterns);
  result.cover.reserve(result.patterns.size());
  for (const auto& p : result.patterns) {
    StringMask m(good.size());
    for (std::size_t j = 0; j < good.size(); ++j) {
      if (compatible(p, good[j])) m.set(j);
    }
    result.cover.push_back(std::move(m));
  }
  return result;
}

std::optional<std::uint64_t> trivial_kernel_count(std::size_t alphabet_size, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (alphabet_size != 0 && total > UINT64_MAX / alphabet_size) return std::nullopt;
    total *= alphabet_size;
  }
  return total;
}

std::optional<std::uint64_t> trivial_kernel_count(const Instance& inst) {
  return trivial_kernel_count(inst.alphabet().size(), inst.length());
}

std::optional<Verdict> pips_bound_check(const Instance& inst) {
  const auto r = inst.bounds().max_stars;
  if (!r) return std::nullopt;
  // each r-bounded pattern matches at most |Sigma|^r strings
  const auto per_pattern = trivial_kernel_count(inst.alphabet().size(), *r);
  if (!per_pattern) return std::nullopt;
  const std::uint64_t k = inst.budget();
  if (k != 0 && *per_pattern > UINT64_MAX / k) return std::nullopt;
  if (inst.good().size() > k * *per_pattern) return Verdict::no;
  return std::nullopt;
}

}  // namespace patsep
