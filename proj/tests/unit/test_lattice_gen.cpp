#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "supermod/lattice_gen.hpp"

using namespace supermod;

TEST_CASE("lattice catalogue matches the known counts up to isomorphism") {
  const auto lattices = enumerate_lattices(7);
  std::map<std::size_t, std::size_t> by_size;
  for (const Poset& p : lattices) ++by_size[p.size()];
  // Unlabeled lattices on n = 1..7 elements.
  const std::map<std::size_t, std::size_t> known{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 5}, {6, 15}, {7, 53}};
  CHECK(by_size == known);
}

TEST_CASE("catalogue entries are lattices and pairwise non-isomorphic") {
  const auto lattices = enumerate_lattices(6);
  for (std::size_t a = 0; a < lattices.size(); ++a) {
    CHECK(oracle::is_lattice_by_scan(lattices[a]));
    const Poset& p = lattices[a];
    CHECK(p.name(0) == "0");
    for (Elem e = 0; e < p.size(); ++e) {
      CHECK(p.leq(0, e));
      CHECK(p.leq(e, p.size() - 1));
    }
    for (std::size_t b = a + 1; b < lattices.size(); ++b) CHECK_FALSE(oracle::isomorphic(lattices[a], lattices[b]));
  }
  CHECK_ERRC(enumerate_lattices(8), Errc::kInvalidArgument);
}

TEST_CASE("random lattices and sublattices") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = random_lattice(rng, 8);
    CHECK(p.size() <= 8);
    CHECK(oracle::is_lattice_by_scan(p));
    const Subset q = random_sublattice(p, rng);
    CHECK_FALSE(q.empty());
    CHECK(is_sublattice(p, q).ok);
  }
}

TEST_CASE("sublattice closure is the least closed superset") {
  const Poset d = fixture::diamond();
  CHECK(sublattice_closure(d, make_subset(d, {"x", "y"})) == Subset{0, 1, 2, 3});
  CHECK(sublattice_closure(d, make_subset(d, {"x"})) == make_subset(d, {"x"}));
  CHECK(sublattice_closure(d, make_subset(d, {"m", "x"})) == make_subset(d, {"m", "x"}));
}
