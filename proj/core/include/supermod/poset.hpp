#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supermod/limits.hpp"

namespace supermod {

// Index of an element inside its poset.
using Elem = std::size_t;

// Sorted, duplicate-free list of element indices. Most operations below
// accept any span of indices; the ones that test membership normalize first.
using Subset = std::vector<Elem>;

using OrderPair = std::pair<std::string, std::string>;

// A finite partially ordered set with string-named elements.
//
// Posets are immutable handles; copying is cheap and shares storage. Two
// storage forms exist: a dense reflexive-transitive relation matrix, and a
// product form (built by product_poset) whose order is evaluated
// componentwise from the factors, so that large strategy-profile spaces need
// no quadratic storage.
class Poset {
 public:
  // Builds the poset whose order is the reflexive-transitive closure of
  // order_pairs. Throws kDuplicateElement, kUnknownElement, kCycleDetected,
  // or kEmptySubset for an empty element list.
  static Poset build(std::vector<std::string> elements, const std::vector<OrderPair>& order_pairs);
  static Poset from_index_pairs(std::vector<std::string> elements,
                                const std::vector<std::pair<Elem, Elem>>& pairs);

  // 0 < 1 < ... < n-1, named by their decimal index.
  static Poset chain(std::size_t n);
  // n pairwise incomparable elements a0..a{n-1}.
  static Poset antichain(std::size_t n);

  std::size_t size() const;
  const std::string& name(Elem e) const;
  const std::vector<std::string>& names() const;
  std::optional<Elem> find(std::string_view name) const;
  // Throws kUnknownElement.
  Elem index(std::string_view name) const;

  bool leq(Elem a, Elem b) const;
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  bool is_product() const;
  const std::vector<Poset>& factors() const;
  // Per-factor coordinates of a product element (player order = factor order).
  std::vector<Elem> coordinates(Elem e) const;
  Elem compose(std::span<const Elem> coordinates) const;

  // Cached pairwise bounds for small dense posets; empty optional when the
  // bound does not exist. Used by the free functions join/meet.
  std::optional<Elem> cached_join(Elem a, Elem b) const;
  std::optional<Elem> cached_meet(Elem a, Elem b) const;
  bool has_bound_cache() const;

 private:
  struct Impl;
  explicit Poset(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend Poset product_poset(std::span<const Poset> factors, std::size_t cap);
  friend Poset induced_poset(const Poset& p, std::span<const Elem> members);
};

Subset make_subset(const Poset& p, const std::vector<std::string>& names);
Subset normalize(std::span<const Elem> elems);
std::vector<std::string> element_names(const Poset& p, std::span<const Elem> elems);

// Pairwise least upper bound / greatest lower bound, or nullopt.
std::optional<Elem> join(const Poset& p, Elem a, Elem b);
std::optional<Elem> meet(const Poset& p, Elem a, Elem b);

// Least upper bound of a nonempty subset, found by scanning the common upper
// bounds (never by iterated pairwise joins). Throws kEmptySubset.
std::optional<Elem> sup_subset(const Poset& p, std::span<const Elem> subset);
std::optional<Elem> inf_subset(const Poset& p, std::span<const Elem> subset);

// Greatest / least element of the subset itself, if it has one.
std::optional<Elem> maximum(const Poset& p, std::span<const Elem> subset);
std::optional<Elem> minimum(const Poset& p, std::span<const Elem> subset);

bool is_lattice(const Poset& p);
// A finite lattice is complete, so this is decided as is_lattice.
bool is_complete_lattice(const Poset& p);
// Checks sup and inf of all 2^n - 1 nonempty subsets. Throws
// kCarrierTooLarge when the poset exceeds `cap` elements.
bool is_complete_lattice_exhaustive(const Poset& p, std::size_t cap = Limits{}.exhaustive_cap);

// Product order on tuples; element names are "(a,b,...)". Throws
// kEmptySubset for no factors and kProductTooLarge above the cap.
Poset product_poset(std::span<const Poset> factors, std::size_t cap = Limits{}.product_cap);

// Restriction of the order to `members` (kept in ascending index order).
// Throws kEmptySubset.
Poset induced_poset(const Poset& p, std::span<const Elem> members);

// Pair (a, b) whose join or meet escapes a subset; `bound` is the escaping
// element.
struct BoundWitness {
  Elem a = 0;
  Elem b = 0;
  bool is_join = true;
  Elem bound = 0;
};

struct SublatticeVerdict {
  bool ok = true;
  std::optional<BoundWitness> witness;
  explicit operator bool() const { return ok; }
};

// True iff the subset is closed under the ambient pairwise joins and meets.
// Throws kNotALattice if a needed ambient bound does not exist.
SublatticeVerdict is_sublattice(const Poset& p, std::span<const Elem> members);

enum class SubcompleteMode {
  kExhaustive,        // every nonempty subset of S inspected
  kFiniteEquivalence  // pairwise closure, equivalent on finite ambients
};

struct SubcompleteVerdict {
  bool ok = true;
  SubcompleteMode mode = SubcompleteMode::kExhaustive;
  // Subset of S whose sup or inf escapes S (empty when ok).
  Subset witness;
  std::optional<Elem> escaping_bound;
  explicit operator bool() const { return ok; }
};

// Exhaustive for |S| <= exhaustive_cap, otherwise pairwise. Throws
// kNotALattice when an ambient bound is missing, kEmptySubset for empty S.
SubcompleteVerdict is_subcomplete(const Poset& p, std::span<const Elem> members,
                                  std::size_t exhaustive_cap = Limits{}.exhaustive_cap);

// A total map from domain elements to nonempty subsets of the codomain.
struct Correspondence {
  Poset domain;
  Poset codomain;
  std::vector<Subset> images;  // indexed by domain element
};

// Throws kEmptySet if an image is empty, kInvalidArgument on size mismatch.
Correspondence make_correspondence(Poset domain, Poset codomain, std::vector<Subset> images);

struct CorrespondenceWitness {
  Elem t = 0;        // t <= t_prime in the domain
  Elem t_prime = 0;
  Elem x = 0;        // x in image(t)
  Elem x_prime = 0;  // x_prime in image(t_prime)
  bool meet_failed = true;  // otherwise the join left image(t_prime)
  Elem bound = 0;
};

struct CorrespondenceVerdict {
  bool ok = true;
  std::optional<CorrespondenceWitness> witness;
  explicit operator bool() const { return ok; }
};

// For all t <= t', x in phi(t), x' in phi(t'): x meet x' in phi(t) and
// x join x' in phi(t'). Throws kNotALattice if the codomain lacks a bound.
CorrespondenceVerdict is_increasing_correspondence(const Correspondence& phi);

// Covering pairs (a, b): a < b with nothing strictly between.
std::vector<std::pair<Elem, Elem>> hasse_edges(const Poset& p);

// Graphviz rendering of the Hasse diagram, drawn bottom to top.
std::string to_dot(const Poset& p, std::string_view graph_name = "poset");

}  // namespace supermod
