#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "patsep/cli.hpp"

namespace fs = std::filesystem;
using namespace patsep::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "patsep_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

const std::string figure_graph = "5 6\n1 2\n1 3\n1 4\n1 5\n2 3\n4 5\n";

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("reduce ds piped into the oracle") {
  const Run reduced = run_cli({"reduce", "--from", "ds", "--k", "1", "-"}, figure_graph);
  REQUIRE(reduced.code == 0);
  const Run solved = run_cli({"solve", "--alg", "oracle", "-"}, reduced.out);
  CHECK(solved.code == exit_yes);
  CHECK(solved.out.find("# verdict: YES") != std::string::npos);
  CHECK(solved.out.find("\n1 * * * *\n") != std::string::npos);
}

TEST_CASE("verify rejects the all-wildcard pattern") {
  const std::string inst = write_temp(
      "ds_rows.txt", run_cli({"reduce", "--from", "ds", "--k", "1", "-"}, figure_graph).out);
  const std::string pats = write_temp("star.txt", "* * * * *\n");
  const Run r = run_cli({"verify", "--patterns", pats, inst});
  CHECK(r.code == exit_no);
  CHECK(r.out == "NO\n");
  const std::string good = write_temp("good.txt", "1 * * * *\n");
  CHECK(run_cli({"verify", "--patterns", good, inst}).code == exit_yes);
}

TEST_CASE("every algorithm reaches the oracle verdict on the vertex cover table") {
  const std::string vc = run_cli({"reduce", "--from", "vc", "--k", "3", "-"}, figure_graph).out;
  for (const char* alg : {"oracle", "tree-k", "tree-g", "greedy"}) {
    const Run r = run_cli({"solve", "--alg", alg, "-"}, vc);
    CHECK_MESSAGE(r.code == exit_yes, alg);
  }
  CHECK(run_cli({"solve", "--alg", "oracle", "--k", "2", "-"}, vc).code == exit_no);
  CHECK(run_cli({"solve", "--alg", "greedy", "--k", "2", "-"}, vc).code == exit_unknown);
  const Run kernel = run_cli({"solve", "--alg", "kernel", "--base", "0", "--d", "2", "-"}, vc);
  CHECK(kernel.code == exit_yes);
  CHECK(kernel.out.find("# kept_columns: 1 2 3 4 5") != std::string::npos);
}

TEST_CASE("json report") {
  const std::string vc = run_cli({"reduce", "--from", "vc", "--k", "3", "-"}, figure_graph).out;
  const Run r = run_cli({"solve", "--json", "-"}, vc);
  CHECK(r.code == exit_yes);
  CHECK(r.out.find("\"verdict\": \"YES\"") != std::string::npos);
  CHECK(r.out.find("\"size\": 3") != std::string::npos);
}

TEST_CASE("bench figures matches the golden file byte for byte") {
  const Run r = run_cli({"bench", "--suite", "figures"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::string(PATSEP_GOLDEN_DIR) + "/figures.txt"));
}

TEST_CASE("bench random and reductions report zero disagreements") {
  const Run r = run_cli({"bench", "--suite", "random"});
  CHECK(r.code == 0);
  CHECK(r.out.find("greedy worst ratio") != std::string::npos);
  const Run red = run_cli({"bench", "--suite", "reductions"});
  CHECK(red.code == 0);
  CHECK(red.out.find(" 0 failures") != std::string::npos);
}

TEST_CASE("kernelize command") {
  const std::string text = "alphabet: 0 1\nk: 1\nbase: 0\nd: 1\nG:\n0 1 0\nB:\n0 0 0\n";
  const Run r = run_cli({"kernelize", "-"}, text);
  CHECK(r.code == 0);
  CHECK(r.out.find("# kept_columns: 2\n") != std::string::npos);
  const Run solved = run_cli({"solve", "--alg", "oracle", "-"}, r.out);
  CHECK(solved.code == exit_yes);
  CHECK(run_cli({"kernelize", "-"}, "alphabet: 0 1\nk: 1\nG:\n1 1\n").code == exit_input);
}

TEST_CASE("features commands") {
  const std::string inst = write_temp(
      "vc_inst.txt", run_cli({"reduce", "--from", "vc", "--k", "6", "-"}, figure_graph).out);
  const Run to = run_cli({"features", "to-patterns", "--indices", "1,2,4", inst});
  CHECK(to.code == 0);
  const std::string pats = write_temp("vc_pats.txt", to.out);
  CHECK(run_cli({"verify", "--patterns", pats, inst}).code == exit_yes);
  CHECK(run_cli({"features", "to-patterns", "--indices", "3", inst}).code == exit_input);

  const std::string cover = write_temp("vc_cover.txt", "1 * * * *\n* 1 * * *\n* * * 1 *\n");
  const Run from = run_cli({"features", "from-patterns", "--patterns", cover, inst});
  CHECK(from.code == 0);
  CHECK(from.out == "indices: 1 2 4\n");
}

TEST_CASE("extract command") {
  const std::string graph = write_temp("graph.txt", figure_graph);
  const std::string ds = write_temp("ds.txt", "1 * * * *\n");
  const Run r = run_cli({"extract", "--from", "ds", "--patterns", ds, graph});
  CHECK(r.out == "dominating_set: 1\nsize: 1\n");
  const std::string vc = write_temp("vc.txt", "1 * * * *\n* 1 * * *\n* * * 1 *\n");
  CHECK(run_cli({"extract", "--from", "vc", "--patterns", vc, graph}).out ==
        "vertex_cover: 1 2 4\nsize: 3\n");
  const std::string pvc = write_temp("pvc.txt", "σ1 * * *\n* σ2 * *\n* σ4 * *\n");
  CHECK(run_cli({"extract", "--from", "pvc", "--patterns", pvc, graph}).out ==
        "vertex_cover: 1 2 4\nsize: 3\n");
  CHECK(run_cli({"extract", "--from", "vc", "--patterns", ds, graph}).code == exit_internal);
}

TEST_CASE("gen is reproducible") {
  const std::vector<std::string> args = {"gen",  "--seed", "9", "--n",   "5", "--sigma", "2",
                                         "--good", "4",    "--bad", "3", "--d", "2", "--base", "0"};
  const Run a = run_cli(args);
  const Run b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("d: 2") != std::string::npos);
  CHECK(run_cli({"solve", "-"}, a.out).code <= exit_no);
  CHECK(run_cli({"gen", "--seed", "1", "--n", "1", "--sigma", "2", "--d", "1"}).code == exit_usage);
  CHECK(run_cli({"gen", "--seed", "1", "--n", "1", "--sigma", "2", "--good", "3", "--bad", "0"})
            .code == exit_input);
}

TEST_CASE("error exit codes") {
  CHECK(run_cli({}).code == exit_usage);
  CHECK(run_cli({"solve"}).code == exit_usage);
  CHECK(run_cli({"solve", "--alg", "nope", "-"}, "").code == exit_usage);
  CHECK(run_cli({"solve", "/nonexistent/file"}).code == exit_input);
  const Run bad = run_cli({"solve", "-"}, "alphabet: 0 1\nk: 1\nG:\n0 1\nB:\n0 1\n");
  CHECK(bad.code == exit_input);
  CHECK(bad.err.find("line 6") != std::string::npos);
  const std::string wide = "alphabet: 0 1\nk: 1\nG:\n" + std::string("0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n") +
                           "B:\n" + std::string("0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
  CHECK(run_cli({"solve", "--candidate-cap", "100", "-"}, wide).code == exit_resource);
  CHECK(run_cli({"solve", "--alg", "tree-k", "--node-budget", "0", "-"},
                "alphabet: 0 1\nk: 3\nG:\n0 0\n0 1\n1 0\nB:\n1 1\n")
            .code == exit_resource);
}
