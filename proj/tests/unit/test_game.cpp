#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "supermod/game.hpp"
#include "supermod/random_game.hpp"

using namespace supermod;

namespace {

std::optional<Rational> zero(std::size_t, const Profile&) { return Rational(0); }

Elem id(const Game& g, std::vector<std::string> names) { return g.profile_id(names); }

// One player whose strategy set is the 2x2 lattice 00 < 01, 10 < 11.
Game square_player(const std::function<long(int, int)>& f) {
  const Poset sq = Poset::build({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  return Game("square", {"p"}, {sq}, std::nullopt, [sq, f](std::size_t, const Profile& x) -> std::optional<Rational> {
    const std::string& n = sq.name(x[0]);
    return Rational(f(n[0] - '0', n[1] - '0'));
  });
}

Game bits_game(std::vector<Profile> feasible, std::function<long(std::size_t, const Profile&)> f) {
  const Poset bit = Poset::chain(2);
  return Game("bits", {"p1", "p2"}, {bit, bit}, std::move(feasible),
              [f](std::size_t i, const Profile& x) -> std::optional<Rational> { return Rational(f(i, x)); });
}

}  // namespace

TEST_CASE("game construction") {
  const Game one("", {"solo"}, {Poset::chain(1)}, std::nullopt, zero);
  CHECK(one.player_count() == 1);
  CHECK(one.feasible().size() == 1);
  CHECK(one.payoff(0, 0) == 0);

  const Game g = fixture::two_by_two(true);
  CHECK(g.feasible().size() == 4);
  CHECK(g.is_product_form());
  CHECK(g.player_index("p2") == 1);
  CHECK(g.profile_name(id(g, {"0", "1"})) == "(0,1)");
  CHECK(g.profile_key(id(g, {"0", "1"})) == "0|1");
  CHECK(g.profile(id(g, {"1", "0"})) == Profile{1, 0});
  CHECK(g.deviate(id(g, {"1", "0"}), 1, 1) == id(g, {"1", "1"}));
  CHECK_ERRC(g.player_index("p3"), Errc::kUnknownElement);
  CHECK_ERRC(id(g, {"0", "2"}), Errc::kUnknownElement);
}

TEST_CASE("game construction errors") {
  const Poset bit = Poset::chain(2);
  CHECK_ERRC(Game("", {}, {}, std::nullopt, zero), Errc::kEmptySet);
  CHECK_ERRC(Game("", {"a", "a"}, {bit, bit}, std::nullopt, zero), Errc::kDuplicateElement);
  CHECK_ERRC(Game("", {"a"}, {Poset::antichain(2)}, std::nullopt, zero), Errc::kNotALattice);
  CHECK_ERRC(Game("", {"a", "b"}, {bit, bit}, std::vector<Profile>{{0, 0}, {0, 1}}, zero),
             Errc::kNonSurjectiveProjection);
  CHECK_ERRC(Game("", {"a", "b"}, {bit, bit}, std::vector<Profile>{{0, 0}, {1, 1}, {0, 0}}, zero),
             Errc::kDuplicateProfile);
  CHECK_ERRC(Game("", {"a", "b"}, {bit, bit}, std::vector<Profile>{}, zero), Errc::kEmptySet);
  CHECK_ERRC(Game("", {"a"}, {bit}, std::nullopt,
                  [](std::size_t, const Profile& x) -> std::optional<Rational> {
                    if (x[0] == 1) return std::nullopt;
                    return Rational(0);
                  }),
             Errc::kMissingPayoff);
  const Poset wide = Poset::chain(1000);
  CHECK_ERRC(Game("", {"a", "b", "c"}, {wide, wide, bit}, std::nullopt, zero), Errc::kProductTooLarge);
  CHECK_ERRC(fixture::diag2().payoff(0, 1), Errc::kInfeasibleProfile);
}

TEST_CASE("sections and boxes") {
  const Game g = fixture::two_by_two(true);
  for (Elem x : g.feasible()) {
    CHECK(section(g, 0, x) == Subset{0, 1});
    CHECK(feasible_box(g, x) == g.feasible());
  }

  const Game d = fixture::diag2();
  const Elem o = id(d, {"0", "0"});
  CHECK(section(d, 0, o) == Subset{0});
  CHECK(feasible_box(d, o) == ProfileSet{o});
  for (Elem x : d.feasible()) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Subset s = section(d, i, x);
      CHECK(std::binary_search(s.begin(), s.end(), d.profile(x)[i]));
    }
    const ProfileSet box = feasible_box(d, x);
    CHECK(std::binary_search(box.begin(), box.end(), x));
  }
  CHECK_ERRC(section(d, 0, id(d, {"0", "1"})), Errc::kInfeasibleProfile);
  CHECK_ERRC(feasible_box(d, id(d, {"1", "0"})), Errc::kInfeasibleProfile);
}

TEST_CASE("supermodularity on sections") {
  CHECK(check_supermodular_sections(fixture::two_by_two(false), 0).ok);
  CHECK(check_supermodular_sections(square_player([](int a, int b) { return a * b; }), 0).ok);

  const Game neg_min = square_player([](int a, int b) { return -std::min(a, b); });
  const auto v = check_supermodular_sections(neg_min, 0);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.witness);
  const Poset& sq = neg_min.strategies(0);
  CHECK(std::set<std::string>{sq.name(v.witness->y), sq.name(v.witness->z)} == std::set<std::string>{"01", "10"});
  CHECK_FALSE(v.witness->bound_outside_section);
}

TEST_CASE("increasing differences") {
  CHECK(check_increasing_differences(Game("", {"solo"}, {Poset::chain(3)}, std::nullopt, zero), 0).ok);
  CHECK(check_increasing_differences(fixture::two_by_two(true), 0).ok);

  const Game anti = fixture::two_by_two(false);
  const auto v = check_increasing_differences(anti, 0);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.witness);
  CHECK(v.witness->low_low == id(anti, {"0", "0"}));
  CHECK(v.witness->high_low == id(anti, {"1", "0"}));
  CHECK(v.witness->low_high == id(anti, {"0", "1"}));
  CHECK(v.witness->high_high == id(anti, {"1", "1"}));
}

TEST_CASE("validation") {
  CHECK(validate_supermodular(fixture::two_by_two(true)).certified());
  CHECK(validate_supermodular(fixture::diag2()).certified());
  CHECK_FALSE(validate_supermodular(fixture::two_by_two(false)).certified());

  const Game cross = bits_game({{0, 1}, {1, 0}}, [](std::size_t, const Profile&) { return 0L; });
  const ValidationReport r = validate_supermodular(cross);
  CHECK_FALSE(r.certified());
  REQUIRE(r.feasible_sublattice.witness);
  const BoundWitness& w = *r.feasible_sublattice.witness;
  CHECK(w.bound == (w.is_join ? id(cross, {"1", "1"}) : id(cross, {"0", "0"})));
}

TEST_CASE("best responses") {
  const Game g = fixture::two_by_two(true);
  CHECK(best_response(g, 0, id(g, {"0", "0"})) == Subset{0});
  CHECK(best_response(g, 1, id(g, {"1", "1"})) == Subset{1});

  const Game flat("", {"a", "b"}, {Poset::chain(3), Poset::chain(2)}, std::nullopt, zero);
  CHECK(best_response(flat, 0, 0) == Subset{0, 1, 2});

  const Game d = fixture::diag2();
  CHECK(best_response(d, 0, id(d, {"1", "1"})) == Subset{1});
}

TEST_CASE("partial responses") {
  const Game g = fixture::two_by_two(true);
  const std::vector<std::size_t> everyone{0, 1};
  CHECK(partial_response(g, everyone, id(g, {"0", "0"})) == ProfileSet{id(g, {"0", "0"})});
  CHECK(partial_response_all(g, id(g, {"1", "1"})) == ProfileSet{id(g, {"1", "1"})});

  const Game d = fixture::diag2();
  CHECK(partial_response_all(d, id(d, {"0", "0"})) == ProfileSet{id(d, {"0", "0"})});

  CHECK_ERRC(partial_response(g, std::vector<std::size_t>{}, 0), Errc::kEmptyPlayerSet);
  CHECK_ERRC(partial_response(g, std::vector<std::size_t>{1, 1}, 0), Errc::kInvalidArgument);
  CHECK_ERRC(partial_response(g, std::vector<std::size_t>{2}, 0), Errc::kInvalidArgument);
}

TEST_CASE("single-player partial response on product games extends the best response") {
  RandomGameSpec spec;
  spec.max_players = 3;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = random_supermodular_game(spec, seed);
    for (Elem x : g.feasible()) {
      for (std::size_t i = 0; i < g.player_count(); ++i) {
        const Subset yi = best_response(g, i, x);
        ProfileSet expected;
        for (Elem y : feasible_box(g, x)) {
          if (std::binary_search(yi.begin(), yi.end(), g.profile(y)[i])) expected.push_back(y);
        }
        const std::vector<std::size_t> just{i};
        CHECK(partial_response(g, just, x) == expected);
      }
    }
  }
}

TEST_CASE("joint responses") {
  const Game g = fixture::two_by_two(true);
  CHECK(joint_response(g, id(g, {"1", "1"})) == ProfileSet{id(g, {"1", "1"})});
  CHECK(joint_response(g, id(g, {"0", "1"})) == ProfileSet{id(g, {"1", "0"})});

  // The individually best (1,0) is infeasible, so R((0,1)) is empty.
  const Game chain = bits_game({{0, 0}, {0, 1}, {1, 1}},
                               [](std::size_t i, const Profile& x) { return i == 0 ? long(x[0]) : -long(x[1]); });
  CHECK(validate_supermodular(chain).certified());
  CHECK(joint_response(chain, id(chain, {"0", "1"})).empty());
  CHECK_FALSE(partial_response_all(chain, id(chain, {"0", "1"})).empty());
  CHECK_ERRC(joint_response(chain, id(chain, {"1", "0"})), Errc::kInfeasibleProfile);
}

TEST_CASE("joint response lies inside every partial response") {
  const Game chain = bits_game({{0, 0}, {0, 1}, {1, 1}}, [](std::size_t i, const Profile& x) {
    return i == 0 ? long(x[0]) : -long(x[1]);
  });
  for (const Game& g : {fixture::two_by_two(true), fixture::two_by_two(false), fixture::diag2(), chain}) {
    for (Elem x : g.feasible()) {
      const ProfileSet r = joint_response(g, x);
      for (const auto& players : std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}}) {
        const ProfileSet y = partial_response(g, players, x);
        CHECK(std::includes(y.begin(), y.end(), r.begin(), r.end()));
      }
    }
  }
}
