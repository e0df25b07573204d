#include "suites.hpp"

#include <algorithm>

#include "supermod/error.hpp"
#include "supermod/lattice_gen.hpp"
#include "supermod/random.hpp"
#include "supermod/topology.hpp"

namespace supermod::cli {

std::vector<SuiteCount> run_lemma_suite(std::uint64_t seed, std::size_t trials, const Limits& limits) {
  Rng rng(seed);
  SuiteCount restriction{"restriction lemma"};
  SuiteCount product{"product lemma"};
  for (std::size_t t = 0; t < trials; ++t) {
    const Poset p = random_lattice(rng, 8);
    const Subset q = random_sublattice(p, rng);
    ++restriction.total;
    try {
      if (check_restriction_lemma(p, q, limits)) ++restriction.passed;
    } catch (const Error&) {
    }
  }
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Poset> factors;
    const auto count = uniform_int(rng, 1, 3);
    for (std::int64_t k = 0; k < count; ++k) factors.push_back(random_lattice(rng, 4));
    ++product.total;
    try {
      if (check_product_interval_lemma(factors, limits)) ++product.passed;
    } catch (const Error&) {
    }
  }
  return {restriction, product};
}

bool CounterexampleOutcome::ok() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const omega::RefutationReport& r) { return r.subcomplete && r.compact && !r.closed; }) &&
         std::all_of(truncations.begin(), truncations.end(), [](const auto& t) { return t.second; });
}

bool is_discrete(const FiniteTopology& t) {
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t.point_closures()[y] != (Mask{1} << y)) return false;
  }
  return true;
}

CounterexampleOutcome run_counterexample_suite(std::size_t max_truncation) {
  CounterexampleOutcome out;
  for (int kind : {1, 2}) out.reports.push_back(omega::refute_statement(kind));
  for (std::size_t n = 1; n <= max_truncation; ++n) {
    out.truncations.emplace_back(n, is_discrete(interval_topology(omega::truncation(n))));
  }
  return out;
}

}  // namespace supermod::cli
