#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supermod/equilibria.hpp"
#include "supermod/game.hpp"

namespace supermod {

// Header lines such as ("tool", "supermod 0.1.0") or ("input-sha256", ...),
// printed first and in the given order.
using ReportMeta = std::vector<std::pair<std::string, std::string>>;

// "(1,1) -> (0,1) (2 steps)"
std::string trace_text(const Game& g, const ExtremalResult& r);

// "key: value" lines; players in file order, profiles ascending.
std::string validation_text(const Game& g, const ValidationReport& v, const ReportMeta& meta = {});
// The first failing line of validation_text, or nullopt for a certified game.
std::optional<std::string> first_failed_hypothesis(const Game& g, const ValidationReport& v);
std::string equilibrium_text(const Game& g, const EquilibriumReport& r, const ReportMeta& meta = {});

// The same report as a JSON document using the game format's conventions
// (profile keys "a|b", strategy names). Ends with a newline.
std::string equilibrium_json(const Game& g, const EquilibriumReport& r, const ReportMeta& meta = {});

// Hasse diagram of S, bottom to top. Equilibria are drawn with
// shape=doublecircle, style=filled; covering pairs of the induced order on E
// that are not covering pairs of S are added with style=dashed.
std::string equilibrium_dot(const Game& g, const ProfileSet& equilibria);

}  // namespace supermod
