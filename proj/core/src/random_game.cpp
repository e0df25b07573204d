#include "supermod/random_game.hpp"

#include <string>

#include "supermod/error.hpp"
#include "supermod/lattice_gen.hpp"
#include "supermod/random.hpp"

namespace supermod {

namespace {

constexpr int kMaxRounds = 64;

void check(const RandomGameSpec& s) {
  const bool ok = s.min_players >= 1 && s.min_players <= s.max_players && s.max_players <= 4 && s.min_chain >= 1 &&
                  s.min_chain <= s.max_chain && s.max_chain <= 4 && s.linear_min <= s.linear_max &&
                  s.interaction_max >= 0 && s.denominator_max >= 1;
  if (!ok) fail(Errc::kSpecOutOfRange, "random game spec out of range");
}

Rational draw(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t denominator_max) {
  const auto num = uniform_int(rng, lo, hi);
  const auto den = uniform_int(rng, 1, denominator_max);
  Rational v(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v.canonicalize();
  return v;
}

// Grows a sublattice of the product whose projections are onto: close random
// seed profiles under meet and join, then keep adding a profile that uses a
// missing strategy until every strategy appears.
std::vector<Profile> random_feasible(const Poset& space, Rng& rng) {
  const auto& factors = space.factors();
  std::vector<Elem> seed;
  const auto count = uniform_int(rng, 1, 3);
  for (std::int64_t k = 0; k < count; ++k) {
    seed.push_back(static_cast<Elem>(uniform_int(rng, 0, static_cast<std::int64_t>(space.size()) - 1)));
  }
  for (int round = 0; round < kMaxRounds; ++round) {
    const Subset closed = sublattice_closure(space, seed);
    std::optional<std::pair<std::size_t, Elem>> missing;
    for (std::size_t i = 0; i < factors.size() && !missing; ++i) {
      std::vector<bool> used(factors[i].size(), false);
      for (Elem e : closed) used[space.coordinates(e)[i]] = true;
      for (Elem s = 0; s < used.size(); ++s) {
        if (!used[s]) {
          missing.emplace(i, s);
          break;
        }
      }
    }
    if (!missing) {
      std::vector<Profile> out;
      for (Elem e : closed) out.push_back(space.coordinates(e));
      return out;
    }
    Profile p(factors.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = static_cast<Elem>(uniform_int(rng, 0, static_cast<std::int64_t>(factors[i].size()) - 1));
    }
    p[missing->first] = missing->second;
    seed = closed;
    seed.push_back(space.compose(p));
  }
  fail(Errc::kSpecOutOfRange, "could not grow a sublattice with onto projections");
}

}  // namespace

RandomGameSpec RandomGameSpec::corpus() {
  RandomGameSpec s;
  s.min_players = 2;
  s.max_players = 4;
  s.min_chain = 2;
  s.max_chain = 4;
  s.feasibility = FeasibilityMode::kMixed;
  s.linear_min = -4;
  s.linear_max = 4;
  s.interaction_max = 3;
  s.denominator_max = 2;
  return s;
}

Game random_supermodular_game(const RandomGameSpec& spec, std::uint64_t seed, const Limits& limits) {
  check(spec);
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(spec.min_players), static_cast<std::int64_t>(spec.max_players)));
  std::vector<std::string> players;
  std::vector<Poset> strategies;
  for (std::size_t i = 0; i < n; ++i) {
    players.push_back("p" + std::to_string(i + 1));
    strategies.push_back(Poset::chain(static_cast<std::size_t>(
        uniform_int(rng, static_cast<std::int64_t>(spec.min_chain), static_cast<std::int64_t>(spec.max_chain)))));
  }

  std::vector<std::vector<Rational>> linear(n, std::vector<Rational>(n));
  std::vector<std::vector<std::vector<Rational>>> interaction(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) linear[i][j] = draw(rng, spec.linear_min, spec.linear_max, spec.denominator_max);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) interaction[i][j][k] = draw(rng, 0, spec.interaction_max, spec.denominator_max);
  }

  bool product = spec.feasibility == FeasibilityMode::kProduct;
  if (spec.feasibility == FeasibilityMode::kMixed) product = coin(rng);
  std::optional<std::vector<Profile>> feasible;
  if (!product) feasible = random_feasible(product_poset(strategies, limits.product_cap), rng);

  PayoffFn payoff = [&](std::size_t i, const Profile& x) -> std::optional<Rational> {
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) total += linear[i][j] * static_cast<long>(x[j]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) total += interaction[i][j][k] * static_cast<long>(x[j] * x[k]);
    return total;
  };
  return Game("random-" + std::to_string(seed), std::move(players), std::move(strategies), std::move(feasible),
              payoff, limits);
}

}  // namespace supermod
