#pragma once

#include <cstddef>
#include <vector>

#include "supermod/poset.hpp"
#include "supermod/random.hpp"

namespace supermod {

// One representative per isomorphism class of lattices with 1..max_size
// elements (max_size <= 7). Elements are named "0".."n-1" with "0" the
// bottom and "n-1" the top.
std::vector<Poset> enumerate_lattices(std::size_t max_size);

// A random finite lattice with at most max_size elements: a random family of
// subsets of a 4-point ground set, closed under intersection and ordered by
// inclusion.
Poset random_lattice(Rng& rng, std::size_t max_size);

// Closes a few random elements of a lattice under join and meet.
Subset random_sublattice(const Poset& lattice, Rng& rng);

// Smallest superset of `seed` closed under the ambient joins and meets.
// Throws kNotALattice if a needed bound is missing.
Subset sublattice_closure(const Poset& lattice, std::span<const Elem> seed);

}  // namespace supermod
