#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "patsep/io.hpp"

namespace patsep {

namespace {

constexpr std::uint64_t enumerate_limit = std::uint64_t{1} << 20;

// Strings with at most d cells different from base (d = n when unrestricted).
std::optional<std::uint64_t> count_strings(std::size_t sigma, std::size_t n, std::size_t d) {
  if (d >= n) return trivial_kernel_count(sigma, n);
  // sum_{j <= d} C(n, j) (sigma - 1)^j
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    long double term = 1;
    for (std::size_t t = 0; t < j; ++t) {
      term *= static_cast<long double>(n - t) / static_cast<long double>(t + 1);
      term *= static_cast<long double>(sigma - 1);
    }
    if (term > 1.8e19L || static_cast<long double>(total) + term > 1.8e19L) return std::nullopt;
    total += static_cast<std::uint64_t>(term + 0.5L);
  }
  return total;
}

std::size_t off_base(const std::vector<Symbol>& cells, Symbol base) {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [base](Symbol c) { return c != base; }));
}

}  // namespace

Instance gen_random(const GenerateOptions& opt) {
  if (opt.alphabet_size == 0) throw std::invalid_argument("alphabet size must be positive");
  if (opt.d && opt.base >= opt.alphabet_size) {
    throw std::invalid_argument("base symbol is outside the generated alphabet");
  }
  const std::size_t n = opt.length;
  const std::size_t d = opt.d.value_or(n);
  const std::size_t wanted = opt.good + opt.bad;
  const auto available = count_strings(opt.alphabet_size, n, d);
  if (available && wanted > *available) {
    throw std::invalid_argument("requested " + std::to_string(wanted) + " distinct strings but only " +
                                std::to_string(*available) + " exist for these parameters");
  }

  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < opt.alphabet_size; ++i) tokens.push_back(std::to_string(i));
  Alphabet alphabet(std::move(tokens));

  std::mt19937_64 rng(opt.seed);
  std::vector<std::vector<Symbol>> picked;

  if (available && *available <= enumerate_limit) {
    std::vector<std::vector<Symbol>> pool;
    std::vector<Symbol> cells(n, 0);
    while (true) {
      if (!opt.d || off_base(cells, opt.base) <= d) pool.push_back(cells);
      std::size_t i = 0;
      while (i < n && ++cells[i] == opt.alphabet_size) cells[i++] = 0;
      if (i == n) break;
    }
    // partial Fisher-Yates
    for (std::size_t i = 0; i < wanted; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      picked.push_back(pool[i]);
    }
  } else {
    std::set<std::vector<Symbol>> seen;
    std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(opt.alphabet_size - 1));
    std::uniform_int_distribution<std::size_t> column(0, n == 0 ? 0 : n - 1);
    std::uniform_int_distribution<std::size_t> spread(0, d);
    while (picked.size() < wanted) {
      std::vector<Symbol> cells(n);
      if (opt.d) {
        std::fill(cells.begin(), cells.end(), opt.base);
        const std::size_t changes = spread(rng);
        for (std::size_t j = 0; j < changes; ++j) cells[column(rng)] = symbol(rng);
      } else {
        for (auto& c : cells) c = symbol(rng);
      }
      if (seen.insert(cells).second) picked.push_back(std::move(cells));
    }
  }

  std::vector<Pattern> good, bad;
  for (std::size_t i = 0; i < wanted; ++i) {
    (i < opt.good ? good : bad).emplace_back(std::move(picked[i]));
  }
  std::optional<Smallness> smallness;
  if (opt.d) smallness = Smallness{opt.base, *opt.d};
  return Instance(std::move(alphabet), std::move(good), std::move(bad), opt.budget, {}, smallness, n);
}

}  // namespace patsep
