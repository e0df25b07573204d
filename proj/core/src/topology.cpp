#include "supermod/topology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "supermod/error.hpp"

namespace supermod {

namespace {

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_carrier(const std::vector<std::string>& carrier) {
  if (carrier.size() > kMaxTopologyCarrier) {
    fail(Errc::kCarrierTooLarge, "topology carriers are limited to 64 points, got " + std::to_string(carrier.size()));
  }
  std::vector<std::string> sorted = carrier;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    fail(Errc::kDuplicateElement, "carrier lists '" + *it + "' twice");
  }
}

// Packs the bits of `set` selected by `subset` into consecutive positions.
Mask compress(Mask set, Mask subset) {
  Mask out = 0;
  std::size_t k = 0;
  for (Mask rest = subset; rest; rest &= rest - 1, ++k) {
    const int bit = std::countr_zero(rest);
    if ((set >> bit) & 1U) out |= Mask{1} << k;
  }
  return out;
}

}  // namespace

FiniteTopology::FiniteTopology(std::vector<std::string> carrier, std::vector<Mask> point_closures)
    : carrier_(std::move(carrier)), closures_(std::move(point_closures)) {
  check_carrier(carrier_);
  if (closures_.size() != carrier_.size()) fail(Errc::kInvalidArgument, "one point closure per carrier point");
  for (std::size_t y = 0; y < closures_.size(); ++y) {
    if (!((closures_[y] >> y) & 1U) || (closures_[y] & ~full())) {
      fail(Errc::kInvalidArgument, "malformed closure for '" + carrier_[y] + "'");
    }
  }
}

Mask FiniteTopology::full() const { return full_mask(carrier_.size()); }

bool FiniteTopology::is_closed(Mask set) const {
  if (set & ~full()) fail(Errc::kElementOutOfCarrier, "set is not contained in the carrier");
  for (Mask rest = set; rest; rest &= rest - 1) {
    if (closures_[std::countr_zero(rest)] & ~set) return false;
  }
  return true;
}

Mask FiniteTopology::closure(Mask set) const {
  if (set & ~full()) fail(Errc::kElementOutOfCarrier, "set is not contained in the carrier");
  Mask out = 0;
  for (Mask rest = set; rest; rest &= rest - 1) out |= closures_[std::countr_zero(rest)];
  return out;
}

std::vector<Mask> FiniteTopology::closed_sets(std::size_t cap) const {
  if (size() > cap || size() >= 32) {
    fail(Errc::kCarrierTooLarge, "closed-set family requested for " + std::to_string(size()) +
                                     " points (cap " + std::to_string(cap) + ")");
  }
  std::vector<Mask> out;
  for (Mask set = 0; set <= full(); ++set) {
    if (is_closed(set)) out.push_back(set);
  }
  return out;
}

Mask to_mask(const std::vector<std::string>& carrier, const std::vector<std::string>& members) {
  Mask out = 0;
  for (const auto& m : members) {
    auto it = std::find(carrier.begin(), carrier.end(), m);
    if (it == carrier.end()) fail(Errc::kElementOutOfCarrier, "'" + m + "' is not in the carrier");
    out |= Mask{1} << (it - carrier.begin());
  }
  return out;
}

std::vector<std::string> mask_names(const std::vector<std::string>& carrier, Mask set) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    if ((set >> k) & 1U) out.push_back(carrier[k]);
  }
  return out;
}

FiniteTopology generate_topology(std::vector<std::string> carrier,
                                 const std::vector<std::vector<std::string>>& subbasis) {
  check_carrier(carrier);
  std::vector<Mask> masks;
  masks.reserve(subbasis.size());
  for (const auto& member : subbasis) masks.push_back(to_mask(carrier, member));
  return generate_topology(std::move(carrier), masks);
}

FiniteTopology generate_topology(std::vector<std::string> carrier, std::span<const Mask> subbasis) {
  check_carrier(carrier);
  const Mask full = full_mask(carrier.size());
  // The smallest closed set containing y is the intersection of the
  // generators containing y; finite unions of intersections cannot do better.
  std::vector<Mask> closures(carrier.size(), full);
  for (Mask b : subbasis) {
    if (b & ~full) fail(Errc::kElementOutOfCarrier, "subbasis member is not contained in the carrier");
    for (Mask rest = b; rest; rest &= rest - 1) closures[std::countr_zero(rest)] &= b;
  }
  return FiniteTopology(std::move(carrier), std::move(closures));
}

FiniteTopology interval_topology(const Poset& p) {
  if (p.size() > kMaxTopologyCarrier) {
    fail(Errc::kCarrierTooLarge, "interval topology limited to 64 points");
  }
  std::vector<Mask> rays;
  rays.reserve(2 * p.size());
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
  return generate_topology(p.names(), rays);
}

FiniteTopology restrict(const FiniteTopology& t, Mask subset) {
  if (subset & ~t.full()) fail(Errc::kElementOutOfCarrier, "restriction to a set outside the carrier");
  std::vector<std::string> carrier = mask_names(t.carrier(), subset);
  std::vector<Mask> closures;
  for (Mask rest = subset; rest; rest &= rest - 1) {
    closures.push_back(compress(t.point_closures()[std::countr_zero(rest)] & subset, subset));
  }
  return FiniteTopology(std::move(carrier), std::move(closures));
}

FiniteTopology restrict(const FiniteTopology& t, const std::vector<std::string>& subset) {
  return restrict(t, to_mask(t.carrier(), subset));
}

FiniteTopology product_topology(std::span<const FiniteTopology> factors, std::size_t cap) {
  if (factors.empty()) fail(Errc::kEmptySubset, "product of no topologies");
  const std::size_t limit = std::min(cap, kMaxTopologyCarrier);
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.size() == 0 || total > limit / f.size()) {
      fail(Errc::kProductTooLarge, "product topology exceeds " + std::to_string(limit) + " points");
    }
    total *= f.size();
  }
  std::vector<std::size_t> strides(factors.size(), 1);
  for (std::size_t f = factors.size(); f-- > 1;) strides[f - 1] = strides[f] * factors[f].size();
  const auto coord = [&](std::size_t e, std::size_t f) { return (e / strides[f]) % factors[f].size(); };

  std::vector<std::string> carrier;
  carrier.reserve(total);
  for (std::size_t e = 0; e < total; ++e) {
    std::string name = "(";
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) name += ',';
      name += factors[f].carrier()[coord(e, f)];
    }
    carrier.push_back(name + ")");
  }
  // Cylinders over the point closures of each factor; every closed set of a
  // factor is a union of those, so they generate the same topology.
  std::vector<Mask> cylinders;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (Mask closed : factors[f].point_closures()) {
      Mask cyl = 0;
      for (std::size_t e = 0; e < total; ++e) {
        if ((closed >> coord(e, f)) & 1U) cyl |= Mask{1} << e;
      }
      cylinders.push_back(cyl);
    }
  }
  return generate_topology(std::move(carrier), cylinders);
}

namespace {

bool same_topology(const FiniteTopology& a, const FiniteTopology& b, const Limits& limits) {
  if (a != b) return false;
  if (a.size() <= limits.topology_cap && a.size() < 32) {
    return a.closed_sets(limits.topology_cap) == b.closed_sets(limits.topology_cap);
  }
  return true;
}

}  // namespace

bool check_restriction_lemma(const Poset& p, std::span<const Elem> q, const Limits& limits) {
  const Subset members = normalize(q);
  if (!is_subcomplete(p, members, limits.exhaustive_cap)) {
    fail(Errc::kPreconditionViolated, "subset is not a subcomplete sublattice");
  }
  Mask q_mask = 0;
  for (Elem e : members) q_mask |= Mask{1} << e;
  const FiniteTopology own = interval_topology(induced_poset(p, members));
  const FiniteTopology inherited = restrict(interval_topology(p), q_mask);
  return same_topology(own, inherited, limits);
}

bool check_product_interval_lemma(std::span<const Poset> lattices, const Limits& limits) {
  std::vector<FiniteTopology> factors;
  for (const auto& l : lattices) {
    if (!is_lattice(l)) fail(Errc::kNotALattice, "product interval check needs lattice factors");
    factors.push_back(interval_topology(l));
  }
  const std::size_t cap = std::min(limits.product_cap, kMaxTopologyCarrier);
  const FiniteTopology of_product = interval_topology(product_poset(lattices, cap));
  const FiniteTopology product_of = product_topology(factors, cap);
  return same_topology(of_product, product_of, limits);
}

bool finer_than(const FiniteTopology& fine, const FiniteTopology& coarse) {
  if (fine.carrier() != coarse.carrier()) fail(Errc::kCarrierMismatch, "topologies live on different carriers");
  return std::all_of(coarse.point_closures().begin(), coarse.point_closures().end(),
                     [&](Mask c) { return fine.is_closed(c); });
}

std::string dump(const FiniteTopology& t, std::size_t cap) {
  std::vector<std::string> lines;
  for (Mask set : t.closed_sets(cap)) {
    std::string line;
    for (const auto& name : mask_names(t.carrier(), set)) {
      if (!line.empty()) line += ',';
      line += name;
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace supermod
