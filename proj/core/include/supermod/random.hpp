#pragma once

#include <cstdint>
#include <random>

namespace supermod {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. std::uniform_int_distribution is not
// reproducible across standard libraries, so seeded corpora draw through this.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline bool coin(Rng& rng) { return (rng() >> 17) & 1U; }

}  // namespace supermod
