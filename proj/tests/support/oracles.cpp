#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::vector<Mask> closed_family(std::size_t carrier_size, const std::vector<Mask>& subbasis) {
  const Mask full = carrier_size == 64 ? ~Mask{0} : (Mask{1} << carrier_size) - 1;
  std::set<Mask> family(subbasis.begin(), subbasis.end());
  family.insert(0);
  family.insert(full);
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<Mask> snapshot(family.begin(), family.end());
    for (Mask a : snapshot)
      for (Mask b : snapshot) grown |= family.insert(a | b).second;
    snapshot.assign(family.begin(), family.end());
    for (Mask a : snapshot)
      for (Mask b : snapshot) grown |= family.insert(a & b).second;
  }
  return {family.begin(), family.end()};
}

std::vector<Mask> interval_closed_sets(const Poset& p) {
  std::vector<Mask> rays;
  for (Elem x = 0; x < p.size(); ++x) {
    Mask down = 0;
    Mask up = 0;
    for (Elem y = 0; y < p.size(); ++y) {
      if (p.leq(y, x)) down |= Mask{1} << y;
      if (p.leq(x, y)) up |= Mask{1} << y;
    }
    rays.push_back(down);
    rays.push_back(up);
  }
  return closed_family(p.size(), rays);
}

namespace {

std::optional<Elem> extreme_bound(const Poset& p, const std::vector<Elem>& subset, bool upper) {
  std::vector<Elem> bounds;
  for (Elem u = 0; u < p.size(); ++u) {
    const bool bounds_all = std::all_of(subset.begin(), subset.end(),
                                        [&](Elem a) { return upper ? p.leq(a, u) : p.leq(u, a); });
    if (bounds_all) bounds.push_back(u);
  }
  for (Elem c : bounds) {
    const bool best = std::all_of(bounds.begin(), bounds.end(),
                                  [&](Elem u) { return upper ? p.leq(c, u) : p.leq(u, c); });
    if (best) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Elem> sup_by_scan(const Poset& p, const std::vector<Elem>& subset) {
  return extreme_bound(p, subset, true);
}

std::optional<Elem> inf_by_scan(const Poset& p, const std::vector<Elem>& subset) {
  return extreme_bound(p, subset, false);
}

bool is_lattice_by_scan(const Poset& p) {
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (!sup_by_scan(p, {a, b}) || !inf_by_scan(p, {a, b})) return false;
  return true;
}

bool subcomplete_by_enumeration(const Poset& p, const std::vector<Elem>& s) {
  const std::size_t k = s.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Elem> a;
    for (std::size_t j = 0; j < k; ++j)
      if ((mask >> j) & 1U) a.push_back(s[j]);
    const auto sup = sup_by_scan(p, a);
    const auto inf = inf_by_scan(p, a);
    if (!sup || !inf) return false;
    if (std::find(s.begin(), s.end(), *sup) == s.end()) return false;
    if (std::find(s.begin(), s.end(), *inf) == s.end()) return false;
  }
  return true;
}

std::vector<std::vector<bool>> reachability(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool same = true;
    for (Elem x = 0; x < n && same; ++x)
      for (Elem y = 0; y < n && same; ++y) same = a.leq(x, y) == b.leq(perm[x], perm[y]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Elem> stable_for(const supermod::Game& g, std::size_t i) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.profile_space().size(); ++x) {
    if (!g.contains(x)) continue;
    bool stable = true;
    for (Elem s = 0; s < g.strategies(i).size() && stable; ++s) {
      supermod::Profile p = g.profile(x);
      p[i] = s;
      const Elem y = g.profile_id(p);
      if (g.contains(y) && g.payoff(i, y) > g.payoff(i, x)) stable = false;
    }
    if (stable) out.push_back(x);
  }
  return out;
}

std::vector<Elem> nash_by_definition(const supermod::Game& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.profile_space().size(); ++x) {
    if (!g.contains(x)) continue;
    bool nash = true;
    for (std::size_t i = 0; i < g.player_count() && nash; ++i) {
      for (Elem s = 0; s < g.strategies(i).size() && nash; ++s) {
        supermod::Profile p = g.profile(x);
        p[i] = s;
        const Elem y = g.profile_id(p);
        if (g.contains(y) && g.payoff(i, y) > g.payoff(i, x)) nash = false;
      }
    }
    if (nash) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
