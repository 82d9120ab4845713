#pragma once

#include <bit>
#include <optional>
#include <utility>
#include <vector>

#include "granular/family.hpp"
#include "granular/granulation.hpp"
#include "granular/relation.hpp"

namespace granular {

/// The family of T-classes {T(x)}.
inline Covering classes(const ToleranceRelation& t) {
  return Covering(t.universe(), t.relation().successor_sets());
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting over loop-free neighbourhoods.
inline void enumerate_maximal_cliques(const std::vector<Mask>& adj, Mask clique, Mask candidates, Mask excluded,
                                      std::vector<Mask>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(clique);
    return;
  }
  Mask pivot_neighbours = 0;
  int best = -1;
  for (Mask rest = candidates | excluded; rest != 0; rest &= rest - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
    const int score = std::popcount(candidates & adj[u]);
    if (score > best) {
      best = score;
      pivot_neighbours = adj[u];
    }
  }
  for (Mask rest = candidates & ~pivot_neighbours; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const Mask bit = Mask{1} << v;
    enumerate_maximal_cliques(adj, clique | bit, candidates & adj[v], excluded & adj[v], out);
    candidates &= ~bit;
    excluded |= bit;
  }
}

}  // namespace detail

/// The T-blocks: maximal sets of pairwise tolerant elements.
inline Covering blocks(const ToleranceRelation& t) {
  const auto n = t.universe_size();
  std::vector<Mask> adj(n);
  for (std::size_t x = 0; x < n; ++x) adj[x] = t.tclass(x).bits() & ~(Mask{1} << x);
  std::vector<Mask> found;
  detail::enumerate_maximal_cliques(adj, 0, full_mask(n), 0, found);
  return Covering(SubsetFamily::from_masks(t.universe(), found));
}

/// Compatibility kernel: intersection of the T-classes containing x.
inline Subset kernel(const ToleranceRelation& t, std::size_t x) {
  const auto n = t.universe_size();
  if (x >= n) throw UnknownElement("element index " + std::to_string(x) + " out of range");
  auto acc = Subset::full(n);
  for (std::size_t y = 0; y < n; ++y) {
    if (t.tclass(y).contains(x)) acc &= t.tclass(y);
  }
  return acc;
}

/// The same kernel computed as the intersection of the T-blocks containing x.
inline Subset kernel_via_blocks(const ToleranceRelation& t, std::size_t x) { return point_closure(blocks(t), x); }

/// {<x>_T | x in U}, the point closure system of a tolerance.
inline Covering kernel_system(const ToleranceRelation& t) {
  std::vector<Subset> out;
  for (std::size_t x = 0; x < t.universe_size(); ++x) out.push_back(kernel(t, x));
  return Covering(t.universe(), std::move(out));
}

/// First tolerant pair (a, b), a <= b, that no single kernel contains.
inline std::optional<std::pair<std::size_t, std::size_t>> kernel_condition_violation(const ToleranceRelation& t) {
  const auto n = t.universe_size();
  std::vector<Subset> kernels;
  kernels.reserve(n);
  for (std::size_t c = 0; c < n; ++c) kernels.push_back(kernel(t, c));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!t.holds(a, b)) continue;
      bool witnessed = false;
      for (const auto& k : kernels) {
        if (k.contains(a) && k.contains(b)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

/// True iff every tolerant pair lies together in some compatibility kernel.
inline bool kernel_condition(const ToleranceRelation& t) { return !kernel_condition_violation(t).has_value(); }

}  // namespace granular
