#include "gallery.hpp"

#include "supermod/error.hpp"
#include "supermod/game_io.hpp"
#include "supermod/omega.hpp"
#include "supermod/random_game.hpp"

namespace supermod::cli {

namespace {

constexpr std::string_view kOmega = "omega-counterexample";

Game two_by_two(std::string name, bool reward_equal) {
  const Poset bit = Poset::chain(2);
  return Game(std::move(name), {"p1", "p2"}, {bit, bit}, std::nullopt,
              [reward_equal](std::size_t, const Profile& x) -> std::optional<Rational> {
                return Rational((x[0] == x[1]) == reward_equal ? 1 : 0);
              });
}

Game diag2() {
  const Poset bit = Poset::chain(2);
  return Game("diag2", {"p1", "p2"}, {bit, bit}, std::vector<Profile>{{0, 0}, {1, 1}},
              [](std::size_t i, const Profile& x) -> std::optional<Rational> {
                return Rational(static_cast<long>(x[i]));
              });
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"coordination", "anti-coordination", "diag2", "random-seeded",
                                              std::string(kOmega)};
  return names;
}

Game gallery_game(std::string_view name, std::uint64_t seed) {
  if (name == "coordination") return two_by_two("coordination", true);
  if (name == "anti-coordination") return two_by_two("anti-coordination", false);
  if (name == "diag2") return diag2();
  if (name == "random-seeded") return random_supermodular_game(RandomGameSpec::corpus(), seed);
  fail(Errc::kUnknownElement, "no gallery game named '" + std::string(name) + "'");
}

GalleryEntry gallery_entry(std::string_view name, std::uint64_t seed) {
  if (name == kOmega) {
    std::string text;
    for (int kind : {1, 2}) {
      if (kind > 1) text += "\n";
      text += omega::refute_statement(kind).to_text();
    }
    return {std::string(kOmega) + ".txt", text};
  }
  const Game g = gallery_game(name, seed);
  std::string stem(name);
  if (name == "random-seeded") stem += "-" + std::to_string(seed);
  return {stem + ".json", serialize_game(g)};
}

}  // namespace supermod::cli
