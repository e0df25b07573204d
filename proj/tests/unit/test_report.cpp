#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "supermod/report.hpp"

using namespace supermod;

TEST_CASE("validation text") {
  const Game g = fixture::two_by_two(true);
  CHECK(validation_text(g, validate_supermodular(g), {{"tool", "t"}}) ==
        "tool: t\n"
        "game: coordination\n"
        "players: p1 p2\n"
        "feasible: product, 4 of 4 profiles\n"
        "strategy sets are lattices: ok\n"
        "projections are onto: ok\n"
        "feasible set is a sublattice: ok\n"
        "p1 supermodular on sections: ok\n"
        "p1 increasing differences: ok\n"
        "p2 supermodular on sections: ok\n"
        "p2 increasing differences: ok\n"
        "verdict: supermodular\n");
  CHECK_FALSE(first_failed_hypothesis(g, validate_supermodular(g)));

  const Game anti = fixture::two_by_two(false);
  const ValidationReport v = validate_supermodular(anti);
  const std::string text = validation_text(anti, v);
  CHECK(text.find("p1 increasing differences: FAILED: f(1,0) + f(0,1) = 1 + 1 > f(0,0) + f(1,1) = 0 + 0\n") !=
        std::string::npos);
  CHECK(text.find("verdict: not supermodular\n") != std::string::npos);
  CHECK(first_failed_hypothesis(anti, v) ==
        std::optional<std::string>("p1 increasing differences: FAILED: f(1,0) + f(0,1) = 1 + 1 > f(0,0) + f(1,1) = 0 + 0"));

  const Poset bit = Poset::chain(2);
  const Game cross("", {"p1", "p2"}, {bit, bit}, std::vector<Profile>{{0, 1}, {1, 0}},
                   [](std::size_t, const Profile&) -> std::optional<Rational> { return Rational(0); });
  const std::string cross_text = validation_text(cross, validate_supermodular(cross));
  CHECK(cross_text.rfind("players: p1 p2\nfeasible: explicit, 2 of 4 profiles\n", 0) == 0);
  CHECK(cross_text.find("feasible set is a sublattice: FAILED: (0,1) join (1,0) = (1,1) is not feasible\n") !=
        std::string::npos);
}

TEST_CASE("equilibrium text") {
  const Game g = fixture::two_by_two(true);
  CHECK(equilibrium_text(g, equilibrium_report(g)) ==
        "game: coordination\n"
        "players: p1 p2\n"
        "feasible: product, 4 of 4 profiles\n"
        "supermodular: yes\n"
        "F(p1): {(0,0), (1,1)}\n"
        "F(p2): {(0,0), (1,1)}\n"
        "equilibria: {(0,0), (1,1)}\n"
        "count: 2\n"
        "nonempty: yes\n"
        "induced order is a lattice: yes\n"
        "induced order is a complete lattice: yes (exhaustive)\n"
        "sublattice of S: yes\n"
        "subcomplete in S: yes\n"
        "greatest: (1,1)\n"
        "least: (0,0)\n"
        "top-down iteration: (1,1) (1 step)\n"
        "bottom-up iteration: (0,0) (1 step)\n");

  const Game anti = fixture::two_by_two(false);
  const std::string text = equilibrium_text(anti, equilibrium_report(anti));
  CHECK(text.find("supermodular: no\n") != std::string::npos);
  CHECK(text.find("induced order is a lattice: no\n") != std::string::npos);
  CHECK(text.find("greatest: none\n") != std::string::npos);
  CHECK(text.find("iteration") == std::string::npos);
}

TEST_CASE("trace text") {
  const Game g = fixture::two_by_two(true);
  ExtremalResult r;
  r.trace = {3, 1};
  r.profile = 1;
  r.steps = 2;
  CHECK(trace_text(g, r) == "(1,1) -> (0,1) (2 steps)");
}

TEST_CASE("equilibrium JSON") {
  const Game g = fixture::two_by_two(true);
  const std::string text = equilibrium_json(g, equilibrium_report(g), {{"tool", "t"}});
  REQUIRE(text.back() == '\n');
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc.begin().key() == "tool");
  CHECK(doc["name"] == "coordination");
  CHECK(doc["equilibria"] == nlohmann::ordered_json({"0|0", "1|1"}));
  CHECK(doc["F"]["p2"] == nlohmann::ordered_json({"0|0", "1|1"}));
  CHECK(doc["sublattice_of_feasible"] == true);
  CHECK(doc["greatest"] == "1|1");
  CHECK(doc["least"] == "0|0");
  CHECK(doc["top_down"]["trace"] == nlohmann::ordered_json({"1|1"}));
  CHECK(doc["bottom_up"]["steps"] == 1);

  const Game anti = fixture::two_by_two(false);
  const auto anti_doc = nlohmann::ordered_json::parse(equilibrium_json(anti, equilibrium_report(anti)));
  CHECK(anti_doc["greatest"].is_null());
  CHECK(anti_doc["sublattice_of_feasible"] == false);
  CHECK_FALSE(anti_doc.contains("top_down"));
}

TEST_CASE("equilibrium DOT") {
  const Game g = fixture::two_by_two(true);
  CHECK(equilibrium_dot(g, equilibria_bruteforce(g).profiles) ==
        "digraph \"coordination\" {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"(0,0)\", shape=doublecircle, style=filled];\n"
        "  n1 [label=\"(0,1)\"];\n"
        "  n2 [label=\"(1,0)\"];\n"
        "  n3 [label=\"(1,1)\", shape=doublecircle, style=filled];\n"
        "  n0 -> n1;\n"
        "  n0 -> n2;\n"
        "  n1 -> n3;\n"
        "  n2 -> n3;\n"
        "  n0 -> n3 [style=dashed];\n"
        "}\n");

  const Game d = fixture::diag2();
  CHECK(equilibrium_dot(d, {}) ==
        "digraph \"diag2\" {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"(0,0)\"];\n"
        "  n1 [label=\"(1,1)\"];\n"
        "  n0 -> n1;\n"
        "}\n");
}
