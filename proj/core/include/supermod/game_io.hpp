#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "supermod/game.hpp"

namespace supermod {

// Game documents are JSON objects:
//
//   {
//     "name": "coordination",                      (optional)
//     "players": ["p1", "p2"],
//     "strategies": {"p1": {"elements": ["0", "1"], "order": [["0", "1"]]}, ...},
//     "feasible": "product" | [["0", "0"], ["1", "1"], ...],
//     "payoffs": {"p1": {"0|0": "1", "0|1": "-1/2", ...}, ...}
//   }
//
// Profile keys join strategy names with '|' in player order. Payoffs are
// strings ("p", "p/q" or a decimal); JSON numbers are rejected so that no
// value passes through floating point. Errors are kParseError (with the line
// and column for syntax errors, or the JSON pointer of the offending value)
// or any error raised by the Game constructor.
Game load_game(std::string_view document, const Limits& limits = {});

// Throws kIoError when the file cannot be read.
Game load_game_file(const std::filesystem::path& path, const Limits& limits = {});
std::string read_text_file(const std::filesystem::path& path);

// Canonical document: order pairs are the covering pairs, "feasible" is
// "product" for product-form games and otherwise lists profiles in ascending
// order, payoff keys follow the same order. Ends with a newline.
std::string serialize_game(const Game& g);

}  // namespace supermod
