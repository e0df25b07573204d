#include "supermod/lattice_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "supermod/error.hpp"

namespace supermod {

namespace {

using Matrix = std::vector<std::vector<bool>>;

void close_transitively(Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
}

bool has_bound(const Matrix& leq, std::size_t a, std::size_t b, bool upper) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> bounds;
  for (std::size_t u = 0; u < n; ++u) {
    if (upper ? (leq[a][u] && leq[b][u]) : (leq[u][a] && leq[u][b])) bounds.push_back(u);
  }
  for (std::size_t c : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t u) { return upper ? leq[c][u] : leq[u][c]; })) {
      return true;
    }
  }
  return false;
}

bool matrix_is_lattice(const Matrix& leq) {
  for (std::size_t a = 0; a < leq.size(); ++a)
    for (std::size_t b = a + 1; b < leq.size(); ++b)
      if (!has_bound(leq, a, b, true) || !has_bound(leq, a, b, false)) return false;
  return true;
}

// Lexicographically smallest relation code over all relabelings of the
// middle elements 1..n-2 (bottom and top stay fixed).
std::vector<bool> canonical_code(const Matrix& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(leq[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

Poset matrix_to_poset(const Matrix& leq) {
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t i = 0; i < leq.size(); ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < leq.size(); ++j)
      if (i != j && leq[i][j]) pairs.emplace_back(i, j);
  }
  return Poset::from_index_pairs(std::move(names), pairs);
}

}  // namespace

std::vector<Poset> enumerate_lattices(std::size_t max_size) {
  if (max_size > 7) fail(Errc::kInvalidArgument, "lattice enumeration is limited to 7 elements");
  std::vector<Poset> out;
  if (max_size >= 1) out.push_back(Poset::chain(1));
  for (std::size_t n = 2; n <= max_size; ++n) {
    // Any poset has a linear extension, so it suffices to let middle element
    // i lie below middle element j only when i < j.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j) slots.emplace_back(i, j);
    std::set<std::vector<bool>> seen;
    std::vector<Matrix> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Matrix leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][n - 1] = true;
      }
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) leq[slots[s].first][slots[s].second] = true;
      close_transitively(leq);
      if (!matrix_is_lattice(leq)) continue;
      if (seen.insert(canonical_code(leq)).second) found.push_back(leq);
    }
    for (const auto& m : found) out.push_back(matrix_to_poset(m));
  }
  return out;
}

Poset random_lattice(Rng& rng, std::size_t max_size) {
  if (max_size == 0) fail(Errc::kInvalidArgument, "max_size must be positive");
  constexpr unsigned kGround = 4;
  constexpr unsigned kFull = (1U << kGround) - 1;
  for (;;) {
    std::set<unsigned> family{kFull};
    const auto draws = uniform_int(rng, 0, 5);
    for (std::int64_t d = 0; d < draws; ++d) family.insert(static_cast<unsigned>(uniform_int(rng, 0, kFull)));
    bool grown = true;
    while (grown) {
      grown = false;
      std::vector<unsigned> members(family.begin(), family.end());
      for (unsigned a : members)
        for (unsigned b : members)
          if (family.insert(a & b).second) grown = true;
    }
    if (family.size() > max_size) continue;
    std::vector<unsigned> members(family.begin(), family.end());
    std::vector<std::string> names;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::string name = "{";
      for (unsigned bit = 0; bit < kGround; ++bit) {
        if ((members[i] >> bit) & 1U) {
          if (name.size() > 1) name += ',';
          name += std::to_string(bit);
        }
      }
      names.push_back(name + "}");
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && (members[i] & members[j]) == members[i]) pairs.emplace_back(i, j);
    }
    return Poset::from_index_pairs(std::move(names), pairs);
  }
}

Subset sublattice_closure(const Poset& lattice, std::span<const Elem> seed) {
  std::set<Elem> members(seed.begin(), seed.end());
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<Elem> current(members.begin(), members.end());
    for (Elem a : current) {
      for (Elem b : current) {
        auto j = join(lattice, a, b);
        auto m = meet(lattice, a, b);
        if (!j || !m) fail(Errc::kNotALattice, "closure needs an ambient lattice");
        grown |= members.insert(*j).second;
        grown |= members.insert(*m).second;
      }
    }
  }
  return Subset(members.begin(), members.end());
}

Subset random_sublattice(const Poset& lattice, Rng& rng) {
  std::vector<Elem> seed;
  const auto count = uniform_int(rng, 1, 3);
  for (std::int64_t i = 0; i < count; ++i) {
    seed.push_back(static_cast<Elem>(uniform_int(rng, 0, static_cast<std::int64_t>(lattice.size()) - 1)));
  }
  return sublattice_closure(lattice, seed);
}

}  // namespace supermod
