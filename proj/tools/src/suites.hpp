#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "supermod/limits.hpp"
#include "supermod/omega.hpp"
#include "supermod/topology.hpp"

namespace supermod::cli {

struct SuiteCount {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

// `trials` random (lattice of at most 8 elements, random sublattice) pairs for
// the restriction lemma and `trials` random products of 1-3 lattices of at
// most 4 elements for the product lemma, all drawn from one generator.
std::vector<SuiteCount> run_lemma_suite(std::uint64_t seed, std::size_t trials, const Limits& limits = {});

struct CounterexampleOutcome {
  std::vector<omega::RefutationReport> reports;  // statements 1 and 2
  // (n, interval topology of the n-truncation is discrete)
  std::vector<std::pair<std::size_t, bool>> truncations;
  bool ok() const;
};

// Refutes both statements and checks truncations n = 1..max_truncation.
CounterexampleOutcome run_counterexample_suite(std::size_t max_truncation = 6);

// True iff every point closure is a singleton.
bool is_discrete(const FiniteTopology& t);

}  // namespace supermod::cli
