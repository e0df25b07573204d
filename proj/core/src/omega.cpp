#include "supermod/omega.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>

#include "supermod/error.hpp"

namespace supermod::omega {

std::string Token::to_string() const {
  switch (kind) {
    case Kind::kBottom: return "m";
    case Kind::kTop: return "M";
    case Kind::kAtom: return "x" + std::to_string(index);
  }
  return "?";
}

Token Token::parse(const std::string& text) {
  if (text == "m") return bottom();
  if (text == "M") return top();
  if (text.size() >= 2 && text[0] == 'x') {
    std::uint64_t k = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc{} && ptr == last) return atom(k);
  }
  fail(Errc::kParseError, "'" + text + "' is not a token of L (expected m, M or x<k>)");
}

bool leq(Token a, Token b) {
  if (a == b) return true;
  return a.kind == Token::Kind::kBottom || b.kind == Token::Kind::kTop;
}

CofiniteSet CofiniteSet::finite(std::set<Token> members) { return {false, std::move(members)}; }
CofiniteSet CofiniteSet::cofinite(std::set<Token> exceptions) { return {true, std::move(exceptions)}; }

bool CofiniteSet::contains(Token t) const { return cofinite_ != (tokens_.count(t) > 0); }

std::optional<std::size_t> CofiniteSet::atom_count() const {
  if (cofinite_) return std::nullopt;
  return static_cast<std::size_t>(
      std::count_if(tokens_.begin(), tokens_.end(), [](const Token& t) { return t.is_atom(); }));
}

std::vector<Token> CofiniteSet::first_atoms(std::size_t count) const {
  std::vector<Token> out;
  if (!cofinite_) {
    for (const Token& t : tokens_) {
      if (out.size() == count) break;
      if (t.is_atom()) out.push_back(t);
    }
    return out;
  }
  for (std::uint64_t k = 0; out.size() < count; ++k) {
    if (!tokens_.count(Token::atom(k))) out.push_back(Token::atom(k));
  }
  return out;
}

CofiniteSet CofiniteSet::complement() const { return {!cofinite_, tokens_}; }

namespace {

std::set<Token> set_union(const std::set<Token>& a, const std::set<Token>& b) {
  std::set<Token> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
std::set<Token> set_intersection(const std::set<Token>& a, const std::set<Token>& b) {
  std::set<Token> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
std::set<Token> set_difference(const std::set<Token>& a, const std::set<Token>& b) {
  std::set<Token> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

CofiniteSet CofiniteSet::unite(const CofiniteSet& other) const {
  if (!cofinite_ && !other.cofinite_) return finite(set_union(tokens_, other.tokens_));
  if (cofinite_ && other.cofinite_) return cofinite(set_intersection(tokens_, other.tokens_));
  const CofiniteSet& fin = cofinite_ ? other : *this;
  const CofiniteSet& cof = cofinite_ ? *this : other;
  return cofinite(set_difference(cof.tokens_, fin.tokens_));
}

CofiniteSet CofiniteSet::intersect(const CofiniteSet& other) const {
  if (!cofinite_ && !other.cofinite_) return finite(set_intersection(tokens_, other.tokens_));
  if (cofinite_ && other.cofinite_) return cofinite(set_union(tokens_, other.tokens_));
  const CofiniteSet& fin = cofinite_ ? other : *this;
  const CofiniteSet& cof = cofinite_ ? *this : other;
  return finite(set_difference(fin.tokens_, cof.tokens_));
}

bool CofiniteSet::subset_of(const CofiniteSet& other) const {
  return intersect(other.complement()).is_empty();
}

std::string CofiniteSet::to_string() const {
  std::string body;
  for (const Token& t : tokens_) {
    if (!body.empty()) body += ", ";
    body += t.to_string();
  }
  if (!cofinite_) return "{" + body + "}";
  if (tokens_.empty()) return "L";
  return "L \\ {" + body + "}";
}

Token sym_sup(const CofiniteSet& a) {
  if (a.is_empty()) fail(Errc::kEmptySet, "sup of the empty set");
  if (a.contains(Token::top())) return Token::top();
  const auto atoms = a.first_atoms(2);
  if (atoms.size() >= 2) return Token::top();
  if (atoms.size() == 1) return atoms.front();
  return Token::bottom();
}

Token sym_inf(const CofiniteSet& a) {
  if (a.is_empty()) fail(Errc::kEmptySet, "inf of the empty set");
  if (a.contains(Token::bottom())) return Token::bottom();
  const auto atoms = a.first_atoms(2);
  if (atoms.size() >= 2) return Token::bottom();
  if (atoms.size() == 1) return atoms.front();
  return Token::top();
}

CofiniteSet sym_closure(const CofiniteSet& a) { return a.is_cofinite() ? CofiniteSet::whole() : a; }

bool sym_is_closed(const CofiniteSet& a) { return sym_closure(a) == a; }

CompactnessVerdict sym_is_compact(const CofiniteSet& a) {
  std::string argument =
      "every open set of the cofinite topology misses only finitely many points; one member of an open "
      "cover of " +
      a.to_string() + " leaves finitely many points, each covered by one further member";
  return {true, std::move(argument)};
}

SymbolicSubcompleteVerdict sym_is_subcomplete(const CofiniteSet& a) {
  if (a.is_empty()) fail(Errc::kEmptySet, "subcompleteness of the empty set");
  const auto atoms = a.first_atoms(2);
  // With at most one atom, A lies in a chain m <= x <= M, where every
  // nonempty subset contains its own sup and inf.
  if (atoms.size() < 2) return {};
  const CofiniteSet pair = CofiniteSet::finite({atoms[0], atoms[1]});
  if (!a.contains(Token::top())) return {false, pair, Token::top()};
  if (!a.contains(Token::bottom())) return {false, pair, Token::bottom()};
  return {};
}

std::string RefutationReport::to_text() const {
  std::ostringstream out;
  const auto yes_no = [](bool b) { return b ? "true" : "false"; };
  out << "claim (" << kind << "): " << claim << "\n"
      << "witness: " << witness.to_string() << "\n"
      << "subcomplete: " << yes_no(subcomplete) << "\n"
      << "compact: " << yes_no(compact) << "\n"
      << "closed: " << yes_no(closed) << "\n"
      << "closure: " << sym_closure(witness).to_string() << "\n"
      << "verdict: " << (refuted ? "refuted" : "not refuted") << "\n";
  return out.str();
}

RefutationReport refute_statement(int kind) {
  RefutationReport r;
  r.kind = kind;
  switch (kind) {
    case 1:
      r.claim = "a sublattice of a complete lattice is subcomplete iff it is closed in the interval topology";
      break;
    case 2:
      r.claim = "a compact subset of a complete lattice is closed in the interval topology";
      break;
    default:
      fail(Errc::kInvalidArgument, "statement kind must be 1 or 2, got " + std::to_string(kind));
  }
  r.witness = CofiniteSet::cofinite({Token::atom(0)});
  r.subcomplete = sym_is_subcomplete(r.witness).ok;
  r.compact = sym_is_compact(r.witness).compact;
  r.closed = sym_is_closed(r.witness);
  r.refuted = (kind == 1 ? r.subcomplete : r.compact) && !r.closed;
  return r;
}

Poset truncation(std::size_t n) {
  std::vector<std::string> names{"m"};
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("x" + std::to_string(k));
    pairs.emplace_back(0, k + 1);
    pairs.emplace_back(k + 1, n + 1);
  }
  names.push_back("M");
  if (n == 0) pairs.emplace_back(0, 1);
  return Poset::from_index_pairs(std::move(names), pairs);
}

}  // namespace supermod::omega
