#include "patsep/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "patsep/io.hpp"
#include "patsep/reductions.hpp"
#include "patsep/solvers.hpp"

namespace patsep::cli {

namespace {

// Thrown for bad command-line combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return exit_yes;
    case Verdict::no:
      return exit_no;
    case Verdict::unknown:
      return exit_unknown;
  }
  return exit_internal;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream word(token);
    std::string piece;
    while (word >> piece) {
      std::size_t pos = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(piece, &pos);
      } catch (const std::exception&) {
        throw UsageError("bad index '" + piece + "'");
      }
      if (pos != piece.size() || value == 0) throw UsageError("bad index '" + piece + "'");
      out.push_back(value - 1);
    }
  }
  return out;
}

struct SolveArgs {
  std::string alg = "oracle";
  std::optional<std::size_t> k, max_stars, max_symbols, d, node_budget, candidate_cap;
  std::optional<std::string> base;
  bool json = false;
  std::string file;
};

Instance apply_overrides(Instance inst, const std::optional<std::size_t>& k,
                         const std::optional<std::size_t>& max_stars,
                         const std::optional<std::size_t>& max_symbols,
                         const std::optional<std::string>& base,
                         const std::optional<std::size_t>& d) {
  if (k) inst = inst.with_budget(*k);
  if (max_stars || max_symbols) {
    PatternBounds b = inst.bounds();
    if (max_stars) b.max_stars = max_stars;
    if (max_symbols) b.max_symbols = max_symbols;
    inst = inst.with_bounds(b);
  }
  if (base.has_value() != d.has_value()) throw UsageError("--base and --d must be given together");
  if (base) inst = inst.with_smallness(Smallness{inst.alphabet().symbol(*base), *d});
  return inst;
}

Instance load_instance(const std::string& path, std::istream& in, std::ostream& err) {
  auto file = parse_instance(read_input(path, in));
  for (const auto& w : file.warnings) err << "warning: line " << w.line << ": " << w.message << '\n';
  return std::move(file.instance);
}

int run_solve(const SolveArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst =
      apply_overrides(load_instance(a.file, in, err), a.k, a.max_stars, a.max_symbols, a.base, a.d);
  SolverOptions options;
  if (a.node_budget) options.node_budget = *a.node_budget;
  if (a.candidate_cap) options.candidate_cap = *a.candidate_cap;

  const auto start = std::chrono::steady_clock::now();
  Solution sol;
  std::optional<KernelStats> kstats;
  std::vector<std::string> notes;
  if (a.alg == "oracle") {
    sol = solve_oracle(inst, options);
  } else if (a.alg == "tree-k") {
    sol = solve_search_tree_k(inst, options);
  } else if (a.alg == "tree-g") {
    sol = solve_search_tree_g(inst, options);
  } else if (a.alg == "greedy") {
    try {
      sol = solve_greedy_setcover(inst, options);
    } catch (const InfeasibleError& e) {
      sol = Solution::no();
      notes.emplace_back(e.what());
    }
  } else {
    if (!inst.smallness()) throw UsageError("--alg kernel needs base and d (file or --base/--d)");
    if (pips_bound_check(inst) == Verdict::no) {
      sol = Solution::no();
      notes.emplace_back("|G| exceeds k * |alphabet|^r");
    } else {
      const KernelResult kr = kernelize_small(inst);
      sol = lift_solution(kr, solve_oracle(kr.kernel, options));
      kstats = KernelStats{inst.length(), kr.kernel.length(), inst.alphabet().size(),
                           kr.kernel.alphabet().size(), kr.kept_columns};
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!is_valid_solution(inst, sol)) {
    err << "internal error: solver returned a witness that does not verify\n";
    return exit_internal;
  }
  RunReport report = make_report(a.alg, sol, ms);
  report.kernel = kstats;
  report.notes = notes;
  if (a.json) {
    out << report_to_json(report, inst.alphabet()).dump(2) << '\n';
  } else {
    out << report_to_text(report, inst.alphabet());
  }
  return verdict_code(sol.verdict);
}

struct ReductionInput {
  std::string from;
  std::size_t colors = 4;
  std::string graph_file;
};

Coloring reduction_coloring(const Graph& graph, std::size_t colors) {
  return pad_colors(color_graph(graph), colors);
}

void print_coloring(std::ostream& out, const Coloring& c) {
  out << "# coloring:";
  for (std::size_t v = 1; v <= c.color_of.size(); ++v) out << ' ' << v << ':' << c.color(v);
  out << '\n';
}

void print_vertices(std::ostream& out, const std::string& label, const std::set<Vertex>& vs) {
  out << label << ':';
  for (auto v : vs) out << ' ' << v;
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pattern identification: separate string sets G and B with wildcard patterns",
               "patsep"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--alg", solve.alg, "Algorithm")
      ->check(CLI::IsMember({"oracle", "tree-k", "tree-g", "greedy", "kernel"}));
  solve_cmd->add_option("--k", solve.k, "Override the pattern budget");
  solve_cmd->add_option("--max-stars", solve.max_stars, "Max wildcards per pattern (r)");
  solve_cmd->add_option("--max-symbols", solve.max_symbols, "Max symbols per pattern (s)");
  solve_cmd->add_option("--base", solve.base, "Base symbol for smallness");
  solve_cmd->add_option("--d", solve.d, "Smallness bound");
  solve_cmd->add_option("--node-budget", solve.node_budget, "Search node budget");
  solve_cmd->add_option("--candidate-cap", solve.candidate_cap, "Cap on |G|*2^n");
  solve_cmd->add_flag("--json", solve.json, "Machine-readable report");
  solve_cmd->add_option("FILE", solve.file, "Instance file ('-' for stdin)")->required();

  std::string verify_patterns, verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check that patterns separate G from B");
  verify_cmd->add_option("--patterns", verify_patterns, "Pattern file")->required();
  verify_cmd->add_option("FILE", verify_file, "Instance file ('-' for stdin)")->required();

  ReductionInput reduce;
  std::size_t reduce_k = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Encode a graph problem as an instance");
  reduce_cmd->add_option("--from", reduce.from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"ds", "vc", "pvc"}));
  reduce_cmd->add_option("--k", reduce_k, "Budget")->required();
  reduce_cmd->add_option("--colors", reduce.colors, "Minimum string length for pvc")
      ->capture_default_str();
  reduce_cmd->add_option("GRAPHFILE", reduce.graph_file, "Graph file ('-' for stdin)")->required();

  ReductionInput extract;
  std::string extract_patterns;
  auto* extract_cmd = app.add_subcommand("extract", "Map a pattern witness to a graph certificate");
  extract_cmd->add_option("--from", extract.from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"ds", "vc", "pvc"}));
  extract_cmd->add_option("--patterns", extract_patterns, "Pattern file")->required();
  extract_cmd->add_option("--colors", extract.colors, "Minimum string length for pvc")
      ->capture_default_str();
  extract_cmd->add_option("GRAPHFILE", extract.graph_file, "Graph file ('-' for stdin)")->required();

  std::optional<std::string> kernel_base;
  std::optional<std::size_t> kernel_d;
  std::string kernel_file;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Drop uniform columns of a small instance");
  kernel_cmd->add_option("--base", kernel_base, "Base symbol");
  kernel_cmd->add_option("--d", kernel_d, "Smallness bound");
  kernel_cmd->add_option("FILE", kernel_file, "Instance file ('-' for stdin)")->required();

  auto* features_cmd = app.add_subcommand("features", "Convert between feature sets and patterns");
  features_cmd->require_subcommand(1);
  std::string to_indices, to_file, from_patterns, from_file;
  auto* to_cmd = features_cmd->add_subcommand("to-patterns", "Feature set to patterns");
  to_cmd->add_option("--indices", to_indices, "1-based columns, comma separated")->required();
  to_cmd->add_option("FILE", to_file, "Instance file ('-' for stdin)")->required();
  auto* from_cmd = features_cmd->add_subcommand("from-patterns", "Patterns to feature set");
  from_cmd->add_option("--patterns", from_patterns, "Pattern file")->required();
  from_cmd->add_option("FILE", from_file, "Instance file ('-' for stdin)")->required();

  GenerateOptions gen;
  std::optional<std::string> gen_base;
  std::optional<std::size_t> gen_d;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--seed", gen.seed, "Seed")->required();
  gen_cmd->add_option("--n", gen.length, "String length")->required();
  gen_cmd->add_option("--sigma", gen.alphabet_size, "Alphabet size")->required();
  gen_cmd->add_option("--good", gen.good, "|G|")->required();
  gen_cmd->add_option("--bad", gen.bad, "|B|")->required();
  gen_cmd->add_option("--k", gen.budget, "Budget")->capture_default_str();
  gen_cmd->add_option("--d", gen_d, "Smallness bound");
  gen_cmd->add_option("--base", gen_base, "Base symbol");

  std::string suite;
  auto* bench_cmd = app.add_subcommand("bench", "Regression tables");
  bench_cmd->add_option("--suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"figures", "random", "reductions"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*solve_cmd) return run_solve(solve, in, out, err);

    if (*verify_cmd) {
      const Instance inst = load_instance(verify_file, in, err);
      const auto patterns = parse_patterns(read_input(verify_patterns, in), inst.alphabet());
      const bool ok = verify_separation(patterns, inst.good(), inst.bad());
      out << (ok ? "YES" : "NO") << '\n';
      if (ok && patterns.size() > inst.budget()) {
        out << "# note: " << patterns.size() << " patterns exceed k = " << inst.budget() << '\n';
      }
      return ok ? exit_yes : exit_no;
    }

    if (*reduce_cmd) {
      const Graph graph = parse_graph(read_input(reduce.graph_file, in));
      if (reduce.from == "ds") {
        out << serialize_instance(ds_to_pi(graph, reduce_k));
      } else if (reduce.from == "vc") {
        out << serialize_instance(vc_to_pi(graph, reduce_k));
      } else {
        const Coloring coloring = reduction_coloring(graph, reduce.colors);
        print_coloring(out, coloring);
        out << serialize_instance(pvc_to_pis(graph, reduce_k, coloring));
      }
      return 0;
    }

    if (*extract_cmd) {
      const Graph graph = parse_graph(read_input(extract.graph_file, in));
      const std::string text = read_input(extract_patterns, in);
      std::set<Vertex> vertices;
      if (extract.from == "pvc") {
        const Coloring coloring = reduction_coloring(graph, extract.colors);
        const Instance inst = pvc_to_pis(graph, 0, coloring);
        const auto patterns = parse_patterns(text, inst.alphabet());
        vertices = pis_solution_to_vc(graph, coloring, Solution::yes(patterns));
        print_vertices(out, "vertex_cover", vertices);
      } else {
        const auto patterns = parse_patterns(text, Alphabet::binary());
        if (extract.from == "ds") {
          vertices = pi_solution_to_ds(graph, Solution::yes(patterns));
          print_vertices(out, "dominating_set", vertices);
        } else {
          vertices = pi_solution_to_vc(graph, Solution::yes(patterns));
          print_vertices(out, "vertex_cover", vertices);
        }
      }
      out << "size: " << vertices.size() << '\n';
      return 0;
    }

    if (*kernel_cmd) {
      const Instance inst = apply_overrides(load_instance(kernel_file, in, err), std::nullopt,
                                            std::nullopt, std::nullopt, kernel_base, kernel_d);
      const KernelResult kr = kernelize_small(inst);
      out << "# kept_columns:";
      for (auto c : kr.kept_columns) out << ' ' << c + 1;
      out << '\n';
      out << "# kernel_length: " << kr.kernel.length() << " of " << inst.length() << '\n';
      out << "# kernel_alphabet: " << kr.kernel.alphabet().size() << " of "
          << inst.alphabet().size() << '\n';
      out << serialize_instance(kr.kernel);
      return 0;
    }

    if (*to_cmd) {
      const Instance inst = load_instance(to_file, in, err);
      FeatureSet fs;
      for (auto i : parse_index_list(to_indices)) fs.indices.insert(i);
      out << serialize_patterns(feature_set_to_patterns(inst, fs), inst.alphabet());
      return 0;
    }

    if (*from_cmd) {
      const Instance inst = load_instance(from_file, in, err);
      const auto patterns = parse_patterns(read_input(from_patterns, in), inst.alphabet());
      const FeatureSet fs = patterns_to_feature_set(inst, patterns);
      out << "indices:";
      for (auto i : fs.indices) out << ' ' << i + 1;
      out << '\n';
      return 0;
    }

    if (*gen_cmd) {
      if (gen_base.has_value() != gen_d.has_value()) {
        throw UsageError("--base and --d must be given together");
      }
      if (gen_d) {
        gen.d = gen_d;
        std::size_t pos = 0;
        unsigned long b = 0;
        try {
          b = std::stoul(*gen_base, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != gen_base->size() || b >= gen.alphabet_size) {
          throw UsageError("--base must be a symbol of the generated alphabet 0.." +
                           std::to_string(gen.alphabet_size - 1));
        }
        gen.base = static_cast<Symbol>(b);
      }
      out << serialize_instance(gen_random(gen));
      return 0;
    }

    if (*bench_cmd) {
      if (suite == "figures") {
        out << bench_figures();
      } else if (suite == "random") {
        out << bench_random(200, 1);
      } else {
        out << bench_reductions(100, 1);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return exit_internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_usage;
}

}  // namespace patsep::cli
