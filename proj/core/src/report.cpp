#include "supermod/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dot_quote.hpp"

namespace supermod {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_names(const Game& g, const ProfileSet& profiles) {
  std::string out = "{";
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (k) out += ", ";
    out += g.profile_name(profiles[k]);
  }
  return out + "}";
}

std::string payoff_at(const Game& g, std::size_t player, Elem x) {
  return format_rational(g.payoff(player, x));
}

void write_meta(std::ostringstream& out, const Game& g, const ReportMeta& meta) {
  for (const auto& [key, value] : meta) out << key << ": " << value << "\n";
  if (!g.name().empty()) out << "game: " << g.name() << "\n";
  out << "players:";
  for (const auto& p : g.players()) out << " " << p;
  out << "\n";
  out << "feasible: " << (g.is_product_form() ? "product" : "explicit") << ", " << g.feasible().size() << " of "
      << g.profile_space().size() << " profiles\n";
}

const char* ok(bool b) { return b ? "ok" : "FAILED"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Game& g, const SublatticeVerdict& v) {
  if (v.ok) return "ok";
  const BoundWitness& w = *v.witness;
  return std::string("FAILED: ") + g.profile_name(w.a) + (w.is_join ? " join " : " meet ") + g.profile_name(w.b) +
         " = " + g.profile_name(w.bound) + " is not feasible";
}

std::string describe(const Game& g, const SectionVerdict& v) {
  if (v.ok) return "ok";
  const SectionWitness& w = *v.witness;
  const Poset& own = g.strategies(w.player);
  const std::string y = own.name(w.y);
  const std::string z = own.name(w.z);
  std::string out = "FAILED at " + g.profile_name(w.profile) + " with y=" + y + ", z=" + z + ": ";
  if (w.bound_outside_section) return out + "y meet z or y join z leaves the section";
  const auto f = [&](Elem s) { return payoff_at(g, w.player, g.deviate(w.profile, w.player, s)); };
  const Elem lo = *meet(own, w.y, w.z);
  const Elem hi = *join(own, w.y, w.z);
  return out + "f(y meet z) + f(y join z) = " + f(lo) + " + " + f(hi) + " < f(y) + f(z) = " + f(w.y) + " + " +
         f(w.z);
}

std::string describe(const Game& g, const DifferenceVerdict& v) {
  if (v.ok) return "ok";
  const DifferenceWitness& w = *v.witness;
  const auto f = [&](Elem x) { return payoff_at(g, w.player, x); };
  return "FAILED: f" + g.profile_name(w.high_low) + " + f" + g.profile_name(w.low_high) + " = " + f(w.high_low) +
         " + " + f(w.low_high) + " > f" + g.profile_name(w.low_low) + " + f" + g.profile_name(w.high_high) + " = " +
         f(w.low_low) + " + " + f(w.high_high);
}

std::string optional_verdict(const std::optional<bool>& v) {
  return v ? yes_no(*v) : "undefined (S lacks a needed bound)";
}

ordered_json profile_keys(const Game& g, const ProfileSet& profiles) {
  ordered_json out = ordered_json::array();
  for (Elem x : profiles) out.push_back(g.profile_key(x));
  return out;
}

ordered_json trace_json(const Game& g, const ExtremalResult& r) {
  ordered_json out;
  out["profile"] = g.profile_key(r.profile);
  out["trace"] = profile_keys(g, r.trace);
  out["steps"] = r.steps;
  return out;
}

}  // namespace

std::string trace_text(const Game& g, const ExtremalResult& r) {
  std::string out;
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    if (k) out += " -> ";
    out += g.profile_name(r.trace[k]);
  }
  return out + " (" + std::to_string(r.steps) + (r.steps == 1 ? " step)" : " steps)");
}

std::string validation_text(const Game& g, const ValidationReport& v, const ReportMeta& meta) {
  std::ostringstream out;
  write_meta(out, g, meta);
  out << "strategy sets are lattices: " << ok(v.strategies_are_lattices) << "\n";
  out << "projections are onto: " << ok(v.projections_surjective) << "\n";
  out << "feasible set is a sublattice: " << describe(g, v.feasible_sublattice) << "\n";
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    out << g.players()[i] << " supermodular on sections: " << describe(g, v.sections[i]) << "\n";
    out << g.players()[i] << " increasing differences: " << describe(g, v.differences[i]) << "\n";
  }
  out << "verdict: " << (v.certified() ? "supermodular" : "not supermodular") << "\n";
  return out.str();
}

std::optional<std::string> first_failed_hypothesis(const Game& g, const ValidationReport& v) {
  if (!v.feasible_sublattice.ok) return "feasible set is a sublattice: " + describe(g, v.feasible_sublattice);
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    if (!v.sections[i].ok) return g.players()[i] + " supermodular on sections: " + describe(g, v.sections[i]);
    if (!v.differences[i].ok) return g.players()[i] + " increasing differences: " + describe(g, v.differences[i]);
  }
  return std::nullopt;
}

std::string equilibrium_text(const Game& g, const EquilibriumReport& r, const ReportMeta& meta) {
  std::ostringstream out;
  write_meta(out, g, meta);
  out << "supermodular: " << yes_no(r.supermodular) << "\n";
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    out << "F(" << g.players()[i] << "): " << join_names(g, r.equilibria.per_player[i]) << "\n";
  }
  out << "equilibria: " << join_names(g, r.equilibria.profiles) << "\n";
  out << "count: " << r.equilibria.profiles.size() << "\n";
  out << "nonempty: " << yes_no(r.nonempty) << "\n";
  if (r.nonempty) {
    out << "induced order is a lattice: " << yes_no(r.induced_is_lattice) << "\n";
    out << "induced order is a complete lattice: " << yes_no(r.induced_is_complete)
        << (r.completeness_exhaustive ? " (exhaustive)" : " (pairwise)") << "\n";
    out << "sublattice of S: " << optional_verdict(r.sublattice_of_feasible) << "\n";
    out << "subcomplete in S: " << optional_verdict(r.subcomplete_in_feasible) << "\n";
    out << "greatest: " << (r.max_equilibrium ? g.profile_name(*r.max_equilibrium) : "none") << "\n";
    out << "least: " << (r.min_equilibrium ? g.profile_name(*r.min_equilibrium) : "none") << "\n";
  }
  if (r.greatest) out << "top-down iteration: " << trace_text(g, *r.greatest) << "\n";
  if (r.least) out << "bottom-up iteration: " << trace_text(g, *r.least) << "\n";
  return out.str();
}

std::string equilibrium_json(const Game& g, const EquilibriumReport& r, const ReportMeta& meta) {
  ordered_json doc;
  for (const auto& [key, value] : meta) doc[key] = value;
  if (!g.name().empty()) doc["name"] = g.name();
  doc["players"] = g.players();
  doc["supermodular"] = r.supermodular;
  ordered_json f = ordered_json::object();
  for (std::size_t i = 0; i < g.player_count(); ++i) f[g.players()[i]] = profile_keys(g, r.equilibria.per_player[i]);
  doc["F"] = std::move(f);
  doc["equilibria"] = profile_keys(g, r.equilibria.profiles);
  doc["nonempty"] = r.nonempty;
  doc["induced_is_lattice"] = r.induced_is_lattice;
  doc["induced_is_complete"] = r.induced_is_complete;
  doc["completeness_exhaustive"] = r.completeness_exhaustive;
  doc["sublattice_of_feasible"] = r.sublattice_of_feasible ? ordered_json(*r.sublattice_of_feasible) : ordered_json();
  doc["subcomplete_in_feasible"] = r.subcomplete_in_feasible ? ordered_json(*r.subcomplete_in_feasible) : ordered_json();
  doc["greatest"] = r.max_equilibrium ? ordered_json(g.profile_key(*r.max_equilibrium)) : ordered_json();
  doc["least"] = r.min_equilibrium ? ordered_json(g.profile_key(*r.min_equilibrium)) : ordered_json();
  if (r.greatest) doc["top_down"] = trace_json(g, *r.greatest);
  if (r.least) doc["bottom_up"] = trace_json(g, *r.least);
  return doc.dump(2) + "\n";
}

std::string equilibrium_dot(const Game& g, const ProfileSet& equilibria) {
  const ProfileSet& s = g.feasible();
  const Poset s_poset = feasible_poset(g);
  std::vector<bool> marked(s.size(), false);
  Subset e_positions;
  for (Elem x : equilibria) {
    const std::size_t k = g.position(x).value();
    marked[k] = true;
    e_positions.push_back(k);
  }

  std::ostringstream out;
  out << "digraph " << detail::dot_quote(g.name().empty() ? "game" : g.name()) << " {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    out << "  n" << k << " [label=" << detail::dot_quote(g.profile_name(s[k]));
    if (marked[k]) out << ", shape=doublecircle, style=filled";
    out << "];\n";
  }
  const auto s_edges = hasse_edges(s_poset);
  for (auto [a, b] : s_edges) out << "  n" << a << " -> n" << b << ";\n";
  if (!e_positions.empty()) {
    const Poset e_poset = induced_poset(s_poset, e_positions);
    for (auto [a, b] : hasse_edges(e_poset)) {
      const std::pair<Elem, Elem> edge{e_positions[a], e_positions[b]};
      if (std::find(s_edges.begin(), s_edges.end(), edge) == s_edges.end()) {
        out << "  n" << edge.first << " -> n" << edge.second << " [style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace supermod
