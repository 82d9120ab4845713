#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "granular/family.hpp"
#include "granular/operator_table.hpp"
#include "granular/relation.hpp"

namespace granular {

inline constexpr std::size_t kMaxCoveringEnumeration = 4;
inline constexpr std::size_t kMaxToleranceEnumeration = 5;
inline constexpr std::size_t kMaxRelationEnumeration = 4;
inline constexpr std::size_t kMaxExtensiveTableEnumeration = 3;
inline constexpr std::size_t kMaxAdditiveTableEnumeration = 4;

namespace detail {
inline void require_range(std::size_t n, std::size_t cap, const char* what) {
  if (n < 1 || n > cap) {
    throw OutOfRange(std::string(what) + " enumeration requires 1 <= n <= " + std::to_string(cap) + ", got " +
                     std::to_string(n));
  }
}
}  // namespace detail

/// Visits every covering of {1..n} exactly once. A family is read off a bit
/// vector over the nonempty masks 1..2^n-1; families are visited in
/// ascending order of that bit vector.
template <class F>
void for_each_covering(std::size_t n, F&& visit) {
  detail::require_range(n, kMaxCoveringEnumeration, "covering");
  const auto universe = Universe::numbered(n);
  const Mask full = full_mask(n);
  const std::uint64_t families = std::uint64_t{1} << full;
  std::vector<Mask> masks;
  for (std::uint64_t fam = 1; fam < families; ++fam) {
    Mask covered = 0;
    masks.clear();
    for (std::uint64_t rest = fam; rest != 0; rest &= rest - 1) {
      const auto m = static_cast<Mask>(std::countr_zero(rest) + 1);
      masks.push_back(m);
      covered |= m;
    }
    if (covered != full) continue;
    visit(Covering(SubsetFamily::from_masks(universe, masks)));
  }
}

inline std::vector<Covering> enumerate_coverings(std::size_t n) {
  std::vector<Covering> out;
  for_each_covering(n, [&](Covering c) { out.push_back(std::move(c)); });
  return out;
}

/// Visits all 2^(n(n-1)/2) tolerances of {1..n}. Edge (i, j), i < j, taken in
/// lexicographic order, is bit k of a counter that runs upwards.
template <class F>
void for_each_tolerance(std::size_t n, F&& visit) {
  detail::require_range(n, kMaxToleranceEnumeration, "tolerance");
  const auto universe = Universe::numbered(n);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  const std::uint64_t count = std::uint64_t{1} << edges.size();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Mask> succ(n);
    for (std::size_t x = 0; x < n; ++x) succ[x] = Mask{1} << x;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if ((code >> k) & 1U) {
        succ[edges[k].first] |= Mask{1} << edges[k].second;
        succ[edges[k].second] |= Mask{1} << edges[k].first;
      }
    }
    std::vector<Subset> sets;
    for (Mask m : succ) sets.emplace_back(n, m);
    visit(ToleranceRelation(Relation(universe, std::move(sets))));
  }
}

inline std::vector<ToleranceRelation> enumerate_tolerances(std::size_t n) {
  std::vector<ToleranceRelation> out;
  for_each_tolerance(n, [&](ToleranceRelation t) { out.push_back(std::move(t)); });
  return out;
}

/// Visits all 2^(n^2) binary relations of {1..n}; pair (x, y) is bit x*n+y.
template <class F>
void for_each_relation(std::size_t n, F&& visit) {
  detail::require_range(n, kMaxRelationEnumeration, "relation");
  const auto universe = Universe::numbered(n);
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Subset> sets;
    for (std::size_t x = 0; x < n; ++x) sets.emplace_back(n, static_cast<Mask>((code >> (x * n)) & full_mask(n)));
    visit(Relation(universe, std::move(sets)));
  }
}

/// Visits every operator table with H(empty) = empty and X within H(X): each
/// row X ranges over the supersets of X. Any table outside this set fails
/// every axiom system considered here.
template <class F>
void for_each_extensive_table(std::size_t n, F&& visit) {
  detail::require_range(n, kMaxExtensiveTableEnumeration, "extensive table");
  const auto universe = Universe::numbered(n);
  const std::size_t rows = std::size_t{1} << n;
  const Mask full = full_mask(n);
  // Row m is X | extra where extra runs over the subsets of -X; odometer over rows.
  std::vector<Mask> extra(rows, 0);
  while (true) {
    std::vector<Subset> table;
    table.reserve(rows);
    for (std::size_t m = 0; m < rows; ++m) table.emplace_back(n, static_cast<Mask>(m) | extra[m]);
    visit(OperatorTable(universe, std::move(table)));
    std::size_t m = 1;
    for (; m < rows; ++m) {
      const Mask free = full & ~static_cast<Mask>(m);
      // Next subset of `free` in increasing order.
      extra[m] = (extra[m] - free) & free;
      if (extra[m] != 0) break;
    }
    if (m == rows) break;
  }
}

/// Visits every union-preserving, extensive table: one for each choice of the
/// singleton rows H({x}) containing x, extended by H(X) = union of H({x}).
template <class F>
void for_each_additive_table(std::size_t n, F&& visit) {
  detail::require_range(n, kMaxAdditiveTableEnumeration, "additive table");
  const auto universe = Universe::numbered(n);
  const Mask full = full_mask(n);
  std::vector<Mask> extra(n, 0);
  while (true) {
    std::vector<Mask> single(n);
    for (std::size_t x = 0; x < n; ++x) single[x] = (Mask{1} << x) | extra[x];
    visit(OperatorTable::tabulate(universe, [&](const Subset& s) {
      Mask acc = 0;
      for (auto e : s) acc |= single[e];
      return Subset(n, acc);
    }));
    std::size_t x = 0;
    for (; x < n; ++x) {
      const Mask free = full & ~(Mask{1} << x);
      extra[x] = (extra[x] - free) & free;
      if (extra[x] != 0) break;
    }
    if (x == n) break;
  }
}

}  // namespace granular
