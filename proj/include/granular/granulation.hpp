#pragma once

#include <vector>

#include "granular/family.hpp"
#include "granular/relation.hpp"

// Terminology: the point closure of x is also called its down-granule; the
// topological neighbourhoods of closure.hpp are a different notion.

namespace granular {

namespace detail {
inline void require_element(const SubsetFamily& f, std::size_t x) {
  if (x >= f.universe_size()) throw UnknownElement("element index " + std::to_string(x) + " out of range");
}
}  // namespace detail

/// The blocks containing x.
inline SubsetFamily blocks_containing(const SubsetFamily& family, std::size_t x) {
  detail::require_element(family, x);
  std::vector<Subset> out;
  for (const auto& b : family) {
    if (b.contains(x)) out.push_back(b);
  }
  return SubsetFamily(family.universe(), std::move(out));
}

/// Union of the blocks containing x.
inline Subset star(const SubsetFamily& family, std::size_t x) {
  detail::require_element(family, x);
  auto acc = Subset::empty(family.universe_size());
  for (const auto& b : family) {
    if (b.contains(x)) acc |= b;
  }
  return acc;
}

/// Intersection of the blocks containing x, or the whole universe when no
/// block contains x. For a covering this is the down-set {y | y <= x}.
inline Subset point_closure(const SubsetFamily& family, std::size_t x) {
  detail::require_element(family, x);
  auto acc = Subset::full(family.universe_size());
  for (const auto& b : family) {
    if (b.contains(x)) acc &= b;
  }
  return acc;
}

/// Point closure of x in the complemented family; the up-set {y | x <= y}.
inline Subset core(const SubsetFamily& family, std::size_t x) { return point_closure(family_complement(family), x); }

inline Covering star_system(const Covering& beta) {
  std::vector<Subset> out;
  for (std::size_t x = 0; x < beta.universe_size(); ++x) out.push_back(star(beta, x));
  return Covering(beta.universe(), std::move(out));
}

inline Covering point_closure_system(const Covering& beta) {
  std::vector<Subset> out;
  for (std::size_t x = 0; x < beta.universe_size(); ++x) out.push_back(point_closure(beta, x));
  return Covering(beta.universe(), std::move(out));
}

/// The point closure system of the complemented family, {core(x)}.
inline Covering core_system(const Covering& beta) {
  const auto complemented = family_complement(beta);
  std::vector<Subset> out;
  for (std::size_t x = 0; x < beta.universe_size(); ++x) out.push_back(point_closure(complemented, x));
  return Covering(beta.universe(), std::move(out));
}

/// The specialization preorder of a subset system as a Relation with xRy iff
/// x <= y, where y' <= x' means every block containing x' contains y'. Its
/// successor sets are the up-sets, and its inverse has the down-sets.
inline Relation specialization_preorder(const SubsetFamily& family) {
  const auto n = family.universe_size();
  std::vector<Subset> up(n, Subset::empty(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (auto x : point_closure(family, y)) up[x] = up[x].with(y);
  }
  return Relation(family.universe(), std::move(up));
}

/// Union of B x B over the blocks of the family.
inline Relation induced_relation(const SubsetFamily& family) {
  const auto n = family.universe_size();
  std::vector<Subset> succ(n, Subset::empty(n));
  for (const auto& b : family) {
    for (auto x : b) succ[x] |= b;
  }
  return Relation(family.universe(), std::move(succ));
}

/// The tolerance T_beta; T_beta(x) is the star of x.
inline ToleranceRelation induced_tolerance(const Covering& beta) { return ToleranceRelation(induced_relation(beta)); }

struct Granule {
  SubsetFamily blocks_containing;
  Subset star;
  Subset down;
  Subset up;
};

/// Per-element granules of a covering, computed once.
class GranuleProfile {
 public:
  explicit GranuleProfile(const Covering& beta) : universe_(beta.universe()) {
    const auto n = beta.universe_size();
    granules_.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      granules_.push_back(Granule{blocks_containing(beta, x), star(beta, x), point_closure(beta, x),
                                  Subset::empty(n)});
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (auto x : granules_[y].down) granules_[x].up = granules_[x].up.with(y);
    }
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return granules_.size(); }

  const Granule& at(std::size_t x) const {
    if (x >= granules_.size()) throw UnknownElement("element index " + std::to_string(x) + " out of range");
    return granules_[x];
  }

  /// R(x) = star(x): the induced tolerance.
  Relation star_relation() const { return collect([](const Granule& g) { return g.star; }); }
  /// R(x) = down(x): the dual specialization preorder.
  Relation down_relation() const { return collect([](const Granule& g) { return g.down; }); }
  /// R(x) = up(x): the specialization preorder.
  Relation up_relation() const { return collect([](const Granule& g) { return g.up; }); }

 private:
  template <class Pick>
  Relation collect(Pick pick) const {
    std::vector<Subset> succ;
    succ.reserve(granules_.size());
    for (const auto& g : granules_) succ.push_back(pick(g));
    return Relation(universe_, std::move(succ));
  }

  UniversePtr universe_;
  std::vector<Granule> granules_;
};

}  // namespace granular
