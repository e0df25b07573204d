#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supermod/limits.hpp"
#include "supermod/poset.hpp"

namespace supermod {

// Subset of a topology carrier; bit k stands for carrier element k.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxTopologyCarrier = 64;

// A topology on a finite carrier of at most 64 points, described through its
// closed sets.
//
// On a finite carrier the closed sets are exactly the unions of point
// closures cl{y}, so the point closures determine the topology and are what
// is stored. The explicit closed-set family is materialized on request for
// carriers up to Limits::topology_cap points.
class FiniteTopology {
 public:
  // `point_closures[y]` must contain y and be the smallest closed set doing so.
  FiniteTopology(std::vector<std::string> carrier, std::vector<Mask> point_closures);

  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  Mask full() const;
  const std::vector<Mask>& point_closures() const { return closures_; }

  bool is_closed(Mask set) const;
  Mask closure(Mask set) const;

  // Every closed set, sorted ascending by mask. Throws kCarrierTooLarge when
  // the carrier exceeds `cap`.
  std::vector<Mask> closed_sets(std::size_t cap = Limits{}.topology_cap) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  std::vector<std::string> carrier_;
  std::vector<Mask> closures_;
};

Mask to_mask(const std::vector<std::string>& carrier, const std::vector<std::string>& members);
std::vector<std::string> mask_names(const std::vector<std::string>& carrier, Mask set);

// Smallest family containing the subbasis, the empty set and the carrier,
// closed under unions and intersections. Throws kElementOutOfCarrier,
// kDuplicateElement, or kCarrierTooLarge (> 64 points).
FiniteTopology generate_topology(std::vector<std::string> carrier,
                                 const std::vector<std::vector<std::string>>& subbasis);
FiniteTopology generate_topology(std::vector<std::string> carrier, std::span<const Mask> subbasis);

// Generated by the closed rays {y : y <= x} and {y : x <= y}.
FiniteTopology interval_topology(const Poset& p);

// Subspace topology on `subset`, whose points keep their carrier order.
FiniteTopology restrict(const FiniteTopology& t, Mask subset);
FiniteTopology restrict(const FiniteTopology& t, const std::vector<std::string>& subset);

// Generated by the cylinders over closed sets of each factor. The carrier is
// ordered like product_poset of the factors. Throws kProductTooLarge when the
// product exceeds min(cap, 64).
FiniteTopology product_topology(std::span<const FiniteTopology> factors,
                                std::size_t cap = Limits{}.product_cap);

// Interval topology of Q as a poset in its own right equals the subspace
// topology Q inherits from P. Requires Q subcomplete in P (kPreconditionViolated
// otherwise); returns false only on an internal inconsistency.
bool check_restriction_lemma(const Poset& p, std::span<const Elem> q, const Limits& limits = {});

// Interval topology of the product of lattices equals the product of their
// interval topologies. Throws kNotALattice, kProductTooLarge.
bool check_product_interval_lemma(std::span<const Poset> lattices, const Limits& limits = {});

// Every closed set of `coarse` is closed in `fine`. Throws kCarrierMismatch.
bool finer_than(const FiniteTopology& fine, const FiniteTopology& coarse);

// One closed set per line, members comma-separated in carrier order, lines
// sorted lexicographically.
std::string dump(const FiniteTopology& t, std::size_t cap = Limits{}.topology_cap);

}  // namespace supermod
