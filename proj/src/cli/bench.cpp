#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "patsep/cli.hpp"
#include "patsep/io.hpp"
#include "patsep/reductions.hpp"
#include "patsep/solvers.hpp"

namespace patsep::cli {

namespace {

Graph figure_graph() { return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}}); }

void print_witness(std::ostream& out, const std::string& label, const Solution& sol,
                   const Alphabet& alphabet) {
  out << label << ": " << to_string(sol.verdict) << '\n';
  out << serialize_patterns(sol.patterns, alphabet);
}

void print_set(std::ostream& out, const std::string& label, const std::set<Vertex>& vs) {
  out << label << ':';
  for (auto v : vs) out << ' ' << v;
  out << '\n';
}

// Smallest k for which some k-subset satisfies `ok`.
template <class Pred>
std::size_t smallest_vertex_set(const Graph& g, Pred ok) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::set<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) vs.insert(i + 1);
    }
    if (ok(vs)) best = size;
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string bench_figures() {
  std::ostringstream out;
  const Graph graph = figure_graph();
  out << "graph:\n" << serialize_graph(graph);

  out << "\n== dominating set, k = 1\n";
  const Instance ds = ds_to_pi(graph, 1);
  out << serialize_instance(ds);
  const Solution ds_sol = solve_oracle(ds);
  print_witness(out, "oracle", ds_sol, ds.alphabet());
  print_set(out, "dominating_set", pi_solution_to_ds(graph, ds_sol));

  out << "\n== vertex cover, k = 3\n";
  const Instance vc = vc_to_pi(graph, 3);
  out << serialize_instance(vc);
  const Solution vc_sol = solve_oracle(vc);
  print_witness(out, "oracle", vc_sol, vc.alphabet());
  print_set(out, "vertex_cover", pi_solution_to_vc(graph, vc_sol));
  print_witness(out, "oracle k = 2", solve_oracle(vc.with_budget(2)), vc.alphabet());

  out << "\n== coloured vertex cover, k = 3\n";
  const Coloring coloring = pad_colors(color_graph(graph), 4);
  out << "coloring:";
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) out << ' ' << v << ':' << coloring.color(v);
  out << '\n';
  const Instance pvc = pvc_to_pis(graph, 3, coloring);
  out << serialize_instance(pvc);
  const Solution pvc_sol = solve_oracle(pvc);
  print_witness(out, "oracle", pvc_sol, pvc.alphabet());
  print_set(out, "vertex_cover", pis_solution_to_vc(graph, coloring, pvc_sol));
  return out.str();
}

std::string bench_random(std::size_t instances, unsigned long long first_seed) {
  struct Row {
    std::string name;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    double ms = 0;
  };
  Row rows[4] = {{"tree-k"}, {"tree-g"}, {"kernel"}, {"greedy"}};
  double worst_ratio = 1.0;
  double oracle_ms = 0;

  for (std::size_t i = 0; i < instances; ++i) {
    std::mt19937_64 rng(first_seed + i);
    const std::size_t sigma = 2 + rng() % 2;
    const std::size_t n = 1 + rng() % 4;
    const std::size_t total = std::min<std::size_t>(8, *trivial_kernel_count(sigma, n));
    const std::size_t good = rng() % std::min<std::size_t>(6, total + 1);
    const std::size_t bad = std::min<std::size_t>(rng() % 4, total - good);
    GenerateOptions opt{first_seed + i, n, sigma, good, bad, rng() % 4, std::nullopt, 0};
    Instance inst = gen_random(opt);
    std::size_t d = 0;
    for (const auto* block : {&inst.good(), &inst.bad()}) {
      for (const auto& s : *block) {
        d = std::max(d, s.size() - static_cast<std::size_t>(
                                       std::count(s.cells().begin(), s.cells().end(), Symbol{0})));
      }
    }
    inst = inst.with_smallness(Smallness{0, d});

    auto t0 = std::chrono::steady_clock::now();
    const Solution truth = solve_oracle(inst);
    oracle_ms += elapsed_ms(t0);

    const auto tally = [&](Row& row, const Solution& s, std::chrono::steady_clock::time_point t) {
      row.ms += elapsed_ms(t);
      (s.verdict == truth.verdict && is_valid_solution(inst, s) ? row.agree : row.disagree)++;
    };
    t0 = std::chrono::steady_clock::now();
    tally(rows[0], solve_search_tree_k(inst), t0);
    t0 = std::chrono::steady_clock::now();
    tally(rows[1], solve_search_tree_g(inst), t0);
    t0 = std::chrono::steady_clock::now();
    tally(rows[2], solve_kernel_oracle(inst), t0);

    t0 = std::chrono::steady_clock::now();
    const Solution greedy = solve_greedy_setcover(inst.with_budget(inst.good().size()));
    const std::size_t opt_size = solve_oracle(inst.with_budget(inst.good().size())).patterns.size();
    rows[3].ms += elapsed_ms(t0);
    const std::size_t gsize = greedy.stats.approximate_size.value_or(0);
    const double bound = 1.0 + std::log(std::max<double>(1.0, static_cast<double>(inst.good().size())));
    const bool within = static_cast<double>(gsize) <= bound * static_cast<double>(opt_size) + 1e-9;
    (within ? rows[3].agree : rows[3].disagree)++;
    if (opt_size > 0) worst_ratio = std::max(worst_ratio, static_cast<double>(gsize) / opt_size);
  }

  std::ostringstream out;
  out << "random suite: " << instances << " instances, seeds " << first_seed << ".."
      << first_seed + instances - 1 << '\n';
  out << std::left << std::setw(10) << "solver" << std::right << std::setw(8) << "agree"
      << std::setw(10) << "disagree" << std::setw(12) << "time_ms" << '\n';
  out << std::left << std::setw(10) << "oracle" << std::right << std::setw(8) << instances
      << std::setw(10) << 0 << std::setw(12) << std::fixed << std::setprecision(1) << oracle_ms
      << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(10) << row.name << std::right << std::setw(8) << row.agree
        << std::setw(10) << row.disagree << std::setw(12) << std::fixed << std::setprecision(1)
        << row.ms << '\n';
  }
  out << "greedy worst ratio: " << std::setprecision(3) << worst_ratio << '\n';
  return out.str();
}

std::string bench_reductions(std::size_t graphs, unsigned long long first_seed) {
  std::size_t checked = 0, failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < graphs; ++i) {
    std::mt19937_64 rng(first_seed + i);
    const std::size_t n = 1 + rng() % 7;
    const Graph g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const std::size_t ds_min =
        smallest_vertex_set(g, [&](const std::set<Vertex>& vs) { return is_dominating_set(g, vs); });
    const std::size_t vc_min =
        smallest_vertex_set(g, [&](const std::set<Vertex>& vs) { return is_vertex_cover(g, vs); });
    const Coloring coloring = color_graph(g);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto ds = solve_oracle(ds_to_pi(g, k));
      const auto vc = solve_oracle(vc_to_pi(g, k));
      const auto pvc = solve_oracle(pvc_to_pis(g, k, coloring));
      checked += 3;
      failures += (ds.verdict == Verdict::yes) != (ds_min <= k);
      failures += (vc.verdict == Verdict::yes) != (vc_min <= k);
      failures += (pvc.verdict == Verdict::yes) != (vc_min <= k);
      if (ds.verdict == Verdict::yes && pi_solution_to_ds(g, ds).size() > ds.patterns.size()) ++failures;
      if (vc.verdict == Verdict::yes && pi_solution_to_vc(g, vc).size() > vc.patterns.size()) ++failures;
      if (pvc.verdict == Verdict::yes &&
          pis_solution_to_vc(g, coloring, pvc).size() > pvc.patterns.size()) {
        ++failures;
      }
    }
  }
  std::ostringstream out;
  out << "reductions suite: " << graphs << " graphs, " << checked << " verdicts checked, "
      << failures << " failures, " << std::fixed << std::setprecision(1) << elapsed_ms(start)
      << " ms\n";
  return out.str();
}

}  // namespace patsep::cli
