#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "supermod/poset.hpp"

// Symbolic model of the lattice L = {m, M} + an infinite anti-chain
// {x0, x1, ...}, ordered by m <= x_k <= M. Its interval topology is the
// cofinite topology, which makes it the standard witness that a subcomplete
// sublattice need not be closed and that a compact set need not be closed.
namespace supermod::omega {

struct Token {
  enum class Kind : std::uint8_t { kBottom, kAtom, kTop };

  Kind kind = Kind::kBottom;
  std::uint64_t index = 0;  // meaningful for atoms only

  static constexpr Token bottom() { return {Kind::kBottom, 0}; }
  static constexpr Token top() { return {Kind::kTop, 0}; }
  static constexpr Token atom(std::uint64_t k) { return {Kind::kAtom, k}; }

  bool is_atom() const { return kind == Kind::kAtom; }
  // "m", "M", or "x<k>".
  std::string to_string() const;
  // Inverse of to_string; throws kParseError.
  static Token parse(const std::string& text);

  friend auto operator<=>(const Token&, const Token&) = default;
};

// Order of the lattice: m <= everything <= M, atoms pairwise incomparable.
bool leq(Token a, Token b);

// A finite subset of L, or the complement of one. Only finitely many tokens
// are ever stored.
class CofiniteSet {
 public:
  static CofiniteSet finite(std::set<Token> members);
  static CofiniteSet cofinite(std::set<Token> exceptions);
  static CofiniteSet whole() { return cofinite({}); }
  static CofiniteSet empty() { return finite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && tokens_.empty(); }
  // Members when finite, non-members when cofinite.
  const std::set<Token>& tokens() const { return tokens_; }

  bool contains(Token t) const;
  // Number of anti-chain elements, or nullopt when infinitely many.
  std::optional<std::size_t> atom_count() const;
  // The `count` smallest-index atoms in the set (fewer if it has fewer).
  std::vector<Token> first_atoms(std::size_t count) const;

  CofiniteSet complement() const;
  CofiniteSet unite(const CofiniteSet& other) const;
  CofiniteSet intersect(const CofiniteSet& other) const;
  bool subset_of(const CofiniteSet& other) const;

  // "{m, x3}" for finite sets, "L \ {x0}" for cofinite ones, "L" for L.
  std::string to_string() const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;

 private:
  CofiniteSet(bool cofinite, std::set<Token> tokens) : cofinite_(cofinite), tokens_(std::move(tokens)) {}

  bool cofinite_ = false;
  std::set<Token> tokens_;
};

// Exact sup / inf in L. Throws kEmptySet.
Token sym_sup(const CofiniteSet& a);
Token sym_inf(const CofiniteSet& a);

// Closure in the cofinite topology: finite sets are closed, infinite sets are
// dense.
CofiniteSet sym_closure(const CofiniteSet& a);
bool sym_is_closed(const CofiniteSet& a);

struct CompactnessVerdict {
  bool compact = true;
  std::string argument;
};

// Always compact: any open set of a cover misses only finitely many points.
CompactnessVerdict sym_is_compact(const CofiniteSet& a);

struct SymbolicSubcompleteVerdict {
  bool ok = true;
  // Finite B inside A whose sup or inf is missing from A.
  std::optional<CofiniteSet> witness;
  std::optional<Token> escaping_bound;
};

// Every nonempty B inside A has sup and inf in A. Throws kEmptySet.
SymbolicSubcompleteVerdict sym_is_subcomplete(const CofiniteSet& a);

struct RefutationReport {
  int kind = 1;
  std::string claim;
  CofiniteSet witness = CofiniteSet::empty();
  bool subcomplete = false;
  bool compact = false;
  bool closed = true;
  bool refuted = false;

  std::string to_text() const;
};

// kind 1: "a sublattice is subcomplete iff it is closed in the interval
// topology"; kind 2: "a compact set is closed in the interval topology".
// Both are refuted with A = L \ {x0}. Throws kInvalidArgument otherwise.
RefutationReport refute_statement(int kind);

// Finite truncation {m, x0..x{n-1}, M} as an explicit poset.
Poset truncation(std::size_t n);

}  // namespace supermod::omega
