#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "granular/universe.hpp"

namespace granular {

/// A finite set of subsets of one universe. Blocks are deduplicated and kept
/// in ascending mask order, so two families with the same blocks compare equal
/// regardless of how they were built.
class SubsetFamily {
 public:
  using const_iterator = std::vector<Subset>::const_iterator;

  SubsetFamily(UniversePtr universe, std::vector<Subset> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    if (!universe_) throw InvalidUniverse("family requires a universe");
    for (const auto& b : blocks_) {
      if (b.universe_size() != universe_->size()) throw UniverseMismatch("block does not belong to the universe");
    }
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
  }

  /// Builds a family from raw masks over `universe`.
  static SubsetFamily from_masks(UniversePtr universe, const std::vector<Mask>& masks) {
    std::vector<Subset> blocks;
    blocks.reserve(masks.size());
    for (Mask m : masks) blocks.emplace_back(universe->size(), m);
    return SubsetFamily(std::move(universe), std::move(blocks));
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }
  const std::vector<Subset>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const_iterator begin() const noexcept { return blocks_.begin(); }
  const_iterator end() const noexcept { return blocks_.end(); }

  bool contains(const Subset& block) const { return std::binary_search(blocks_.begin(), blocks_.end(), block); }

  Subset union_of() const {
    auto acc = Subset::empty(universe_size());
    for (const auto& b : blocks_) acc |= b;
    return acc;
  }

  /// Intersection of all blocks; the empty family intersects to the universe.
  Subset intersection_of() const {
    auto acc = Subset::full(universe_size());
    for (const auto& b : blocks_) acc &= b;
    return acc;
  }

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return same_universe(a.universe_, b.universe_) && a.blocks_ == b.blocks_;
  }

 private:
  UniversePtr universe_;
  std::vector<Subset> blocks_;
};

/// {-F | F in family}. Empty complements (of the full block) are kept.
inline SubsetFamily family_complement(const SubsetFamily& family) {
  std::vector<Subset> out;
  out.reserve(family.size());
  for (const auto& b : family) out.push_back(b.complement());
  return SubsetFamily(family.universe(), std::move(out));
}

inline bool is_covering(const SubsetFamily& family) {
  return !family.empty() &&
         std::none_of(family.begin(), family.end(), [](const Subset& b) { return b.is_empty(); }) &&
         family.union_of().is_full();
}

/// A family of nonempty blocks whose union is the universe.
class Covering : public SubsetFamily {
 public:
  explicit Covering(SubsetFamily family) : SubsetFamily(std::move(family)) {
    for (const auto& b : blocks()) {
      if (b.is_empty()) throw InvalidCovering("covering contains an empty block");
    }
    if (!union_of().is_full()) throw InvalidCovering("blocks do not cover the universe");
  }

  Covering(UniversePtr universe, std::vector<Subset> blocks)
      : Covering(SubsetFamily(std::move(universe), std::move(blocks))) {}

  static std::optional<Covering> try_make(SubsetFamily family) {
    if (!is_covering(family)) return std::nullopt;
    return Covering(std::move(family));
  }

  /// The partition of the universe into singletons.
  static Covering discrete(const UniversePtr& universe) {
    std::vector<Subset> blocks;
    for (std::size_t i = 0; i < universe->size(); ++i) blocks.push_back(Subset::singleton(universe->size(), i));
    return Covering(universe, std::move(blocks));
  }
};

/// True iff every block of `finer` lies inside some block of `coarser`, i.e.
/// `finer` is a refinement of `coarser`.
inline bool refines(const SubsetFamily& finer, const SubsetFamily& coarser) {
  require_same_universe(finer.universe(), coarser.universe());
  return std::all_of(finer.begin(), finer.end(), [&](const Subset& a) {
    return std::any_of(coarser.begin(), coarser.end(), [&](const Subset& b) { return a.is_subset_of(b); });
  });
}

}  // namespace granular
