#pragma once

#include <doctest.h>

#include "supermod/error.hpp"
#include "supermod/game.hpp"
#include "supermod/poset.hpp"

#define CHECK_ERRC(expr, errc)                          \
  do {                                                  \
    try {                                               \
      (void)(expr);                                     \
      FAIL_CHECK("expected " #errc);                    \
    } catch (const supermod::Error& error_) {           \
      CHECK_MESSAGE(error_.code() == (errc), error_.what()); \
    }                                                   \
  } while (0)

namespace fixture {

// m < x, y < M
inline supermod::Poset diamond() {
  return supermod::Poset::build({"m", "x", "y", "M"}, {{"m", "x"}, {"m", "y"}, {"x", "M"}, {"y", "M"}});
}

inline supermod::Elem at(const supermod::Poset& p, const char* name) { return p.index(name); }

// Two players with strategies 0 < 1 and payoff 1 when strategies agree
// (coordination) or differ (anti-coordination).
inline supermod::Game two_by_two(bool reward_equal) {
  const auto bit = supermod::Poset::chain(2);
  return supermod::Game(reward_equal ? "coordination" : "anti-coordination", {"p1", "p2"}, {bit, bit}, std::nullopt,
                        [reward_equal](std::size_t, const supermod::Profile& x) -> std::optional<supermod::Rational> {
                          return supermod::Rational((x[0] == x[1]) == reward_equal ? 1 : 0);
                        });
}

// S = {(0,0),(1,1)} over chain2 x chain2, f_i = x_i.
inline supermod::Game diag2() {
  const auto bit = supermod::Poset::chain(2);
  return supermod::Game("diag2", {"p1", "p2"}, {bit, bit}, std::vector<supermod::Profile>{{0, 0}, {1, 1}},
                        [](std::size_t i, const supermod::Profile& x) -> std::optional<supermod::Rational> {
                          return supermod::Rational(static_cast<long>(x[i]));
                        });
}

}  // namespace fixture
