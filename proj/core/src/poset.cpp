#include "supermod/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "supermod/error.hpp"
#include "dot_quote.hpp"

namespace supermod {

namespace {

constexpr std::size_t kBoundCacheLimit = 64;
constexpr std::int32_t kNoBound = -1;

std::string join_names(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

}  // namespace

struct Poset::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;

  // Dense form: row-major bit matrix, bit (a, b) set iff a <= b.
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  // Product form.
  std::vector<Poset> factors;
  std::vector<std::size_t> strides;

  std::vector<std::int32_t> join_table;
  std::vector<std::int32_t> meet_table;

  bool dense_leq(Elem a, Elem b) const {
    return (bits[a * words + b / 64] >> (b % 64)) & 1U;
  }
  void set_leq(Elem a, Elem b) { bits[a * words + b / 64] |= std::uint64_t{1} << (b % 64); }

  void index_names() {
    index.reserve(names.size());
    for (Elem i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second) {
        fail(Errc::kDuplicateElement, "element '" + names[i] + "' listed twice");
      }
    }
  }
};

Poset::Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Poset Poset::build(std::vector<std::string> elements, const std::vector<OrderPair>& order_pairs) {
  std::unordered_map<std::string_view, Elem> lookup;
  for (Elem i = 0; i < elements.size(); ++i) lookup.emplace(elements[i], i);
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(order_pairs.size());
  for (const auto& [lo, hi] : order_pairs) {
    auto a = lookup.find(lo);
    auto b = lookup.find(hi);
    if (a == lookup.end()) fail(Errc::kUnknownElement, "order pair mentions unknown element '" + lo + "'");
    if (b == lookup.end()) fail(Errc::kUnknownElement, "order pair mentions unknown element '" + hi + "'");
    pairs.emplace_back(a->second, b->second);
  }
  return from_index_pairs(std::move(elements), pairs);
}

Poset Poset::from_index_pairs(std::vector<std::string> elements,
                              const std::vector<std::pair<Elem, Elem>>& pairs) {
  if (elements.empty()) fail(Errc::kEmptySubset, "a poset needs at least one element");
  auto impl = std::make_shared<Impl>();
  impl->names = std::move(elements);
  impl->index_names();
  const std::size_t n = impl->names.size();
  impl->words = (n + 63) / 64;
  impl->bits.assign(n * impl->words, 0);
  for (Elem i = 0; i < n; ++i) impl->set_leq(i, i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) fail(Errc::kUnknownElement, "order pair index out of range");
    impl->set_leq(a, b);
  }
  // Warshall closure on bit rows.
  const std::size_t w = impl->words;
  for (Elem k = 0; k < n; ++k) {
    const std::uint64_t* row_k = &impl->bits[k * w];
    for (Elem i = 0; i < n; ++i) {
      if (i != k && impl->dense_leq(i, k)) {
        std::uint64_t* row_i = &impl->bits[i * w];
        for (std::size_t j = 0; j < w; ++j) row_i[j] |= row_k[j];
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (impl->dense_leq(a, b) && impl->dense_leq(b, a)) {
        fail(Errc::kCycleDetected,
             "'" + impl->names[a] + "' and '" + impl->names[b] + "' are mutually ordered");
      }
    }
  }
  if (n <= kBoundCacheLimit) {
    Poset tmp{impl};
    impl->join_table.assign(n * n, kNoBound);
    impl->meet_table.assign(n * n, kNoBound);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const Elem pair[2] = {a, b};
        if (auto j = sup_subset(tmp, pair)) impl->join_table[a * n + b] = static_cast<std::int32_t>(*j);
        if (auto m = inf_subset(tmp, pair)) impl->meet_table[a * n + b] = static_cast<std::int32_t>(*m);
      }
    }
  }
  return Poset{std::move(impl)};
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) pairs.emplace_back(i - 1, i);
  }
  return from_index_pairs(std::move(names), pairs);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (Elem i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return from_index_pairs(std::move(names), {});
}

std::size_t Poset::size() const { return impl_->names.size(); }
const std::string& Poset::name(Elem e) const { return impl_->names.at(e); }
const std::vector<std::string>& Poset::names() const { return impl_->names; }

std::optional<Elem> Poset::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Elem Poset::index(std::string_view name) const {
  if (auto e = find(name)) return *e;
  fail(Errc::kUnknownElement, "no element named '" + std::string(name) + "'");
}

bool Poset::leq(Elem a, Elem b) const {
  const Impl& im = *impl_;
  if (im.factors.empty()) return im.dense_leq(a, b);
  for (std::size_t f = 0; f < im.factors.size(); ++f) {
    const std::size_t size = im.factors[f].size();
    if (!im.factors[f].leq((a / im.strides[f]) % size, (b / im.strides[f]) % size)) return false;
  }
  return true;
}

bool Poset::is_product() const { return !impl_->factors.empty(); }
const std::vector<Poset>& Poset::factors() const { return impl_->factors; }

std::vector<Elem> Poset::coordinates(Elem e) const {
  const Impl& im = *impl_;
  std::vector<Elem> out(im.factors.size());
  for (std::size_t f = 0; f < im.factors.size(); ++f) out[f] = (e / im.strides[f]) % im.factors[f].size();
  return out;
}

Elem Poset::compose(std::span<const Elem> coordinates) const {
  const Impl& im = *impl_;
  if (coordinates.size() != im.factors.size()) fail(Errc::kInvalidArgument, "coordinate count mismatch");
  Elem e = 0;
  for (std::size_t f = 0; f < im.factors.size(); ++f) {
    if (coordinates[f] >= im.factors[f].size()) fail(Errc::kUnknownElement, "coordinate out of range");
    e += coordinates[f] * im.strides[f];
  }
  return e;
}

bool Poset::has_bound_cache() const { return !impl_->join_table.empty(); }

std::optional<Elem> Poset::cached_join(Elem a, Elem b) const {
  const std::int32_t v = impl_->join_table[a * size() + b];
  if (v == kNoBound) return std::nullopt;
  return static_cast<Elem>(v);
}

std::optional<Elem> Poset::cached_meet(Elem a, Elem b) const {
  const std::int32_t v = impl_->meet_table[a * size() + b];
  if (v == kNoBound) return std::nullopt;
  return static_cast<Elem>(v);
}

Subset make_subset(const Poset& p, const std::vector<std::string>& names) {
  Subset out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(p.index(n));
  return normalize(out);
}

Subset normalize(std::span<const Elem> elems) {
  Subset out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> element_names(const Poset& p, std::span<const Elem> elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(p.name(e));
  return out;
}

namespace {

template <bool Upper>
std::optional<Elem> bound_by_scan(const Poset& p, std::span<const Elem> subset) {
  if (subset.empty()) fail(Errc::kEmptySubset, "sup/inf of an empty subset");
  const auto dominates = [&](Elem bound, Elem x) { return Upper ? p.leq(x, bound) : p.leq(bound, x); };
  std::optional<Elem> best;
  std::vector<Elem> bounds;
  for (Elem u = 0; u < p.size(); ++u) {
    bool all = true;
    for (Elem a : subset) {
      if (!dominates(u, a)) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    bounds.push_back(u);
    // If a least (greatest) bound exists, it replaces every candidate seen
    // before it and is never replaced afterwards.
    if (!best || dominates(*best, u)) best = u;
  }
  if (!best) return std::nullopt;
  for (Elem u : bounds) {
    if (!dominates(u, *best)) return std::nullopt;
  }
  return best;
}

template <bool Upper>
std::optional<Elem> pairwise_bound(const Poset& p, Elem a, Elem b) {
  if (a >= p.size() || b >= p.size()) fail(Errc::kUnknownElement, "element index out of range");
  if (p.has_bound_cache()) return Upper ? p.cached_join(a, b) : p.cached_meet(a, b);
  if (p.is_product()) {
    const auto ca = p.coordinates(a);
    const auto cb = p.coordinates(b);
    std::vector<Elem> out(ca.size());
    for (std::size_t f = 0; f < ca.size(); ++f) {
      auto c = Upper ? join(p.factors()[f], ca[f], cb[f]) : meet(p.factors()[f], ca[f], cb[f]);
      if (!c) return std::nullopt;
      out[f] = *c;
    }
    return p.compose(out);
  }
  if (p.leq(a, b)) return Upper ? b : a;
  if (p.leq(b, a)) return Upper ? a : b;
  const Elem pair[2] = {a, b};
  return bound_by_scan<Upper>(p, pair);
}

template <bool Greatest>
std::optional<Elem> extreme_of(const Poset& p, std::span<const Elem> subset) {
  if (subset.empty()) return std::nullopt;
  Elem best = subset.front();
  for (Elem e : subset) {
    if (Greatest ? p.leq(best, e) : p.leq(e, best)) best = e;
  }
  for (Elem e : subset) {
    if (!(Greatest ? p.leq(e, best) : p.leq(best, e))) return std::nullopt;
  }
  return best;
}

}  // namespace

std::optional<Elem> join(const Poset& p, Elem a, Elem b) { return pairwise_bound<true>(p, a, b); }
std::optional<Elem> meet(const Poset& p, Elem a, Elem b) { return pairwise_bound<false>(p, a, b); }

std::optional<Elem> sup_subset(const Poset& p, std::span<const Elem> subset) {
  return bound_by_scan<true>(p, subset);
}
std::optional<Elem> inf_subset(const Poset& p, std::span<const Elem> subset) {
  return bound_by_scan<false>(p, subset);
}

std::optional<Elem> maximum(const Poset& p, std::span<const Elem> subset) { return extreme_of<true>(p, subset); }
std::optional<Elem> minimum(const Poset& p, std::span<const Elem> subset) { return extreme_of<false>(p, subset); }

bool is_lattice(const Poset& p) {
  if (p.is_product()) {
    return std::all_of(p.factors().begin(), p.factors().end(), [](const Poset& f) { return is_lattice(f); });
  }
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = a + 1; b < p.size(); ++b) {
      if (!join(p, a, b) || !meet(p, a, b)) return false;
    }
  }
  return true;
}

bool is_complete_lattice(const Poset& p) { return is_lattice(p); }

bool is_complete_lattice_exhaustive(const Poset& p, std::size_t cap) {
  const std::size_t n = p.size();
  if (n > cap || n >= 63) {
    fail(Errc::kCarrierTooLarge, "exhaustive completeness check limited to " + std::to_string(cap) + " elements");
  }
  std::vector<Elem> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (Elem e = 0; e < n; ++e) {
      if ((mask >> e) & 1U) subset.push_back(e);
    }
    if (!sup_subset(p, subset) || !inf_subset(p, subset)) return false;
  }
  return true;
}

Poset product_poset(std::span<const Poset> factors, std::size_t cap) {
  if (factors.empty()) fail(Errc::kEmptySubset, "product of no factors");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.size() == 0 || total > cap / f.size()) {
      fail(Errc::kProductTooLarge, "product exceeds the cap of " + std::to_string(cap) + " elements");
    }
    total *= f.size();
  }
  auto impl = std::make_shared<Poset::Impl>();
  impl->factors.assign(factors.begin(), factors.end());
  impl->strides.assign(factors.size(), 1);
  for (std::size_t f = factors.size(); f-- > 1;) {
    impl->strides[f - 1] = impl->strides[f] * factors[f].size();
  }
  impl->names.reserve(total);
  std::vector<std::string> parts(factors.size());
  for (Elem e = 0; e < total; ++e) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      parts[f] = factors[f].name((e / impl->strides[f]) % factors[f].size());
    }
    impl->names.push_back(join_names(parts));
  }
  impl->index_names();
  return Poset{std::move(impl)};
}

Poset induced_poset(const Poset& p, std::span<const Elem> members) {
  const Subset kept = normalize(members);
  if (kept.empty()) fail(Errc::kEmptySubset, "induced poset on an empty subset");
  if (kept.back() >= p.size()) fail(Errc::kUnknownElement, "member index out of range");
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> pairs;
  names.reserve(kept.size());
  for (Elem i = 0; i < kept.size(); ++i) {
    names.push_back(p.name(kept[i]));
    for (Elem j = 0; j < kept.size(); ++j) {
      if (i != j && p.leq(kept[i], kept[j])) pairs.emplace_back(i, j);
    }
  }
  return Poset::from_index_pairs(std::move(names), pairs);
}

namespace {

std::vector<bool> membership(const Poset& p, std::span<const Elem> members) {
  std::vector<bool> in(p.size(), false);
  for (Elem e : members) {
    if (e >= p.size()) fail(Errc::kUnknownElement, "member index out of range");
    in[e] = true;
  }
  return in;
}

[[noreturn]] void missing_bound(const Poset& p, Elem a, Elem b, bool is_join) {
  fail(Errc::kNotALattice, std::string(is_join ? "join" : "meet") + " of '" + p.name(a) + "' and '" +
                               p.name(b) + "' does not exist in the ambient poset");
}

}  // namespace

SublatticeVerdict is_sublattice(const Poset& p, std::span<const Elem> members) {
  const Subset s = normalize(members);
  if (s.empty()) fail(Errc::kEmptySubset, "sublattice test on an empty subset");
  const auto in = membership(p, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (bool is_join : {true, false}) {
        auto bound = is_join ? join(p, s[i], s[j]) : meet(p, s[i], s[j]);
        if (!bound) missing_bound(p, s[i], s[j], is_join);
        if (!in[*bound]) return {false, BoundWitness{s[i], s[j], is_join, *bound}};
      }
    }
  }
  return {};
}

SubcompleteVerdict is_subcomplete(const Poset& p, std::span<const Elem> members, std::size_t exhaustive_cap) {
  const Subset s = normalize(members);
  if (s.empty()) fail(Errc::kEmptySubset, "subcompleteness test on an empty subset");
  if (s.size() > exhaustive_cap || s.size() >= 63) {
    SubcompleteVerdict v;
    v.mode = SubcompleteMode::kFiniteEquivalence;
    const auto pairwise = is_sublattice(p, s);
    if (!pairwise.ok) {
      v.ok = false;
      v.witness = normalize(std::vector<Elem>{pairwise.witness->a, pairwise.witness->b});
      v.escaping_bound = pairwise.witness->bound;
    }
    return v;
  }
  const auto in = membership(p, s);
  std::vector<Elem> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
    subset.clear();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if ((mask >> k) & 1U) subset.push_back(s[k]);
    }
    for (bool upper : {true, false}) {
      auto bound = upper ? sup_subset(p, subset) : inf_subset(p, subset);
      if (!bound) {
        fail(Errc::kNotALattice, std::string(upper ? "sup" : "inf") + " of a subset does not exist in the ambient poset");
      }
      if (!in[*bound]) return {false, SubcompleteMode::kExhaustive, subset, *bound};
    }
  }
  return {};
}

Correspondence make_correspondence(Poset domain, Poset codomain, std::vector<Subset> images) {
  if (images.size() != domain.size()) fail(Errc::kInvalidArgument, "one image per domain element required");
  for (Elem t = 0; t < images.size(); ++t) {
    images[t] = normalize(images[t]);
    if (images[t].empty()) fail(Errc::kEmptySet, "image of '" + domain.name(t) + "' is empty");
    if (images[t].back() >= codomain.size()) fail(Errc::kUnknownElement, "image element out of range");
  }
  return Correspondence{std::move(domain), std::move(codomain), std::move(images)};
}

CorrespondenceVerdict is_increasing_correspondence(const Correspondence& phi) {
  const Poset& dom = phi.domain;
  const Poset& cod = phi.codomain;
  const auto contains = [](const Subset& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); };
  for (Elem t = 0; t < dom.size(); ++t) {
    for (Elem tp = 0; tp < dom.size(); ++tp) {
      if (!dom.leq(t, tp)) continue;
      for (Elem x : phi.images[t]) {
        for (Elem xp : phi.images[tp]) {
          auto lo = meet(cod, x, xp);
          if (!lo) missing_bound(cod, x, xp, false);
          if (!contains(phi.images[t], *lo)) return {false, CorrespondenceWitness{t, tp, x, xp, true, *lo}};
          auto hi = join(cod, x, xp);
          if (!hi) missing_bound(cod, x, xp, true);
          if (!contains(phi.images[tp], *hi)) return {false, CorrespondenceWitness{t, tp, x, xp, false, *hi}};
        }
      }
    }
  }
  return {};
}

std::vector<std::pair<Elem, Elem>> hasse_edges(const Poset& p) {
  std::vector<std::pair<Elem, Elem>> edges;
  const std::size_t n = p.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool covered = true;
      for (Elem c = 0; c < n && covered; ++c) {
        if (p.less(a, c) && p.less(c, b)) covered = false;
      }
      if (covered) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::string to_dot(const Poset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(graph_name) << " {\n  rankdir=BT;\n";
  for (Elem e = 0; e < p.size(); ++e) {
    out << "  n" << e << " [label=" << detail::dot_quote(p.name(e)) << "];\n";
  }
  for (auto [a, b] : hasse_edges(p)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace supermod
