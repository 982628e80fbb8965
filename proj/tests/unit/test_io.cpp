#include <random>

#include "doctest.h"
#include "patsep/io.hpp"
#include "patsep/reductions.hpp"
#include "support/brute_force.hpp"

using namespace patsep;
using patsep::testing::figure_graph;
using patsep::testing::rows;

namespace {

const Alphabet bin = Alphabet::binary();

const char* ds_file = R"(# dominating set of the five-vertex graph
alphabet: 0 1
k: 1
G:
1 1 1 1 1
1 1 1 0 0
1 1 1 0 0
1 0 0 1 1
1 0 0 1 1
B:
0 0 0 0 0
)";

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the dominating set file with duplicate rows") {
  const InstanceFile f = parse_instance(ds_file);
  CHECK(f.instance.good().size() == 3);
  CHECK(f.instance.bad() == rows(bin, {"00000"}));
  CHECK(f.instance.budget() == 1);
  REQUIRE(f.warnings.size() == 2);
  CHECK(f.warnings[0].line == 7);
  CHECK(f.warnings[0].message.find("line 6") != std::string::npos);
  CHECK(f.warnings[1].line == 9);
  CHECK(f.instance.good() == ds_to_pi(figure_graph(), 1).good());
}

TEST_CASE("empty G block") {
  const InstanceFile f = parse_instance("alphabet: 0 1\nk: 0\nG:\nB:\n0 1\n");
  CHECK(f.instance.good().empty());
  CHECK(f.instance.length() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(message_of<DisjointnessError>("alphabet: 0 1\nk: 1\nG:\n0 1\nB:\n0 1\n").find("line 6") !=
        std::string::npos);
  CHECK(message_of<LengthError>("alphabet: 0 1\nk: 1\nG:\n0 1\n0 1 1\n").find("line 5") !=
        std::string::npos);
  CHECK(message_of<ParseError>("alphabet: 0 1\nk: 1\nG:\n0 *\n").find("line 4") !=
        std::string::npos);
  CHECK(message_of<ParseError>("alphabet: 0 1\nk: 1\nG:\n0 2\n").find("unknown symbol") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_instance("alphabet: 0 1\nG:\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("alphabet: 0 1\nk: 1\nd: 1\nG:\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("alphabet: 0 1\nk: 1\nbase: 0\nd: 1\nG:\n1 1\n"),
                  SmallnessError);
  try {
    parse_instance("alphabet: 0 1\nk: x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("header keys") {
  const InstanceFile f =
      parse_instance("alphabet: a b c\nk: 2\nbase: a\nd: 1\nr: 1\ns: 2\nG:\na b\nB:\nc a\n");
  const Instance& inst = f.instance;
  CHECK(inst.alphabet().size() == 3);
  CHECK(inst.budget() == 2);
  CHECK(inst.bounds().max_stars == std::optional<std::size_t>(1));
  CHECK(inst.bounds().max_symbols == std::optional<std::size_t>(2));
  REQUIRE(inst.smallness().has_value());
  CHECK(inst.smallness()->base == 0);
  CHECK(inst.smallness()->d == 1);
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t sigma = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % 5;
    const std::size_t total = *trivial_kernel_count(sigma, n);
    const std::size_t good = rng() % (std::min<std::size_t>(6, total) + 1);
    const std::size_t bad = std::min<std::size_t>(rng() % 4, total - good);
    GenerateOptions opt{rng(), n, sigma, good, bad, rng() % 4, std::nullopt, 0};
    Instance inst = gen_random(opt);
    if (rng() % 2) inst = inst.with_bounds(PatternBounds{rng() % (n + 1), {}});
    if (rng() % 2) inst = inst.with_smallness(Smallness{0, n});
    const Instance back = parse_instance(serialize_instance(inst)).instance;
    CHECK(back.alphabet().tokens() == inst.alphabet().tokens());
    CHECK(back.good() == inst.good());
    CHECK(back.bad() == inst.bad());
    CHECK(back.length() == inst.length());
    CHECK(back.budget() == inst.budget());
    CHECK(back.bounds().max_stars == inst.bounds().max_stars);
    CHECK(back.bounds().max_symbols == inst.bounds().max_symbols);
    CHECK(back.smallness() == inst.smallness());
  }
}

TEST_CASE("pattern files") {
  const auto ps = parse_patterns("# witness\n1 * * * *\n\n* 1 * * *\n", bin);
  CHECK(ps == rows(bin, {"1****", "*1***"}));
  CHECK(serialize_patterns(ps, bin) == "1 * * * *\n* 1 * * *\n");
  CHECK_THROWS_AS(parse_patterns("1 *\n1 * *\n", bin), LengthError);
  CHECK_THROWS_AS(parse_patterns("1 2\n", bin), ParseError);
}

TEST_CASE("graph files") {
  const Graph g = parse_graph(serialize_graph(figure_graph()));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edges() == figure_graph().edges());
  CHECK(parse_graph("3 0\n").edge_count() == 0);

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 2\n1 2\n2 2\n") == 3);     // self-loop
  CHECK(line_of("3 2\n1 2\n2 1\n") == 3);     // duplicate
  CHECK(line_of("3 1\n1 4\n") == 2);          // out of range
  CHECK(line_of("# c\n3 1\n1 x\n") == 3);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("generator is deterministic and honours its options") {
  GenerateOptions opt{42, 6, 3, 5, 4, 2, 2, 0};
  const Instance a = gen_random(opt);
  const Instance b = gen_random(opt);
  CHECK(a.good() == b.good());
  CHECK(a.bad() == b.bad());
  CHECK(a.good().size() == 5);
  CHECK(a.bad().size() == 4);
  CHECK(a.length() == 6);
  std::vector<Pattern> all = a.good();
  all.insert(all.end(), a.bad().begin(), a.bad().end());
  CHECK(is_d_small(a.alphabet(), all, 0, 2));

  opt.seed = 43;
  const Instance c = gen_random(opt);
  CHECK((c.good() != a.good() || c.bad() != a.bad()));

  // only 4 strings exist over {0,1}^2
  CHECK_THROWS_AS(gen_random(GenerateOptions{1, 2, 2, 3, 2, 1, std::nullopt, 0}),
                  std::invalid_argument);
  // the 1-small strings over {0,1}^2 are 00, 01 and 10
  CHECK_THROWS_AS(gen_random(GenerateOptions{1, 2, 2, 4, 0, 1, 1, 0}), std::invalid_argument);

  // large space uses rejection sampling
  const Instance big = gen_random(GenerateOptions{5, 40, 3, 20, 20, 3, std::nullopt, 0});
  CHECK(big.good().size() == 20);
  CHECK(big.bad().size() == 20);
}

TEST_CASE("text and json reports carry the same verdict and witness") {
  const Instance inst = vc_to_pi(figure_graph(), 3);
  const Solution sol = solve_oracle(inst);
  RunReport rep = make_report("oracle", sol, 1.5);
  rep.kernel = KernelStats{5, 4, 2, 2, {0, 1, 3, 4}};
  const std::string text = report_to_text(rep, inst.alphabet());
  const nlohmann::json j = report_to_json(rep, inst.alphabet());

  CHECK(text.find("# verdict: YES") != std::string::npos);
  CHECK(j["verdict"] == "YES");
  CHECK(parse_patterns(text, inst.alphabet()) == sol.patterns);
  REQUIRE(j["witness"].size() == sol.patterns.size());
  for (std::size_t i = 0; i < sol.patterns.size(); ++i) {
    CHECK(j["witness"][i].get<std::string>() == to_string(sol.patterns[i], inst.alphabet()));
  }
  CHECK(j["kernel"]["kept_columns"] == nlohmann::json::array({1, 2, 4, 5}));
  CHECK(text.find("# kept_columns: 1 2 4 5") != std::string::npos);
  CHECK(j["size"] == 3);
}
