#pragma once

#include <cstddef>

namespace supermod {

// Size caps for operations whose cost grows exponentially or quadratically.
struct Limits {
  // Largest carrier a product poset or product topology may have.
  std::size_t product_cap = 1'000'000;
  // Largest subset on which subset-exhaustive checks (2^n - 1 subsets) run.
  std::size_t exhaustive_cap = 12;
  // Largest carrier for which an explicit closed-set family is materialized.
  std::size_t topology_cap = 16;
};

}  // namespace supermod
