#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supermod/game.hpp"

namespace supermod::cli {

// coordination, anti-coordination, diag2, random-seeded, omega-counterexample.
const std::vector<std::string>& gallery_names();

// Throws kUnknownElement for names that are not games (including
// omega-counterexample, which is a symbolic report).
Game gallery_game(std::string_view name, std::uint64_t seed = 0);

struct GalleryEntry {
  std::string file_name;
  std::string contents;
};

// The serialized game, or the refutation report for omega-counterexample.
GalleryEntry gallery_entry(std::string_view name, std::uint64_t seed = 0);

}  // namespace supermod::cli
