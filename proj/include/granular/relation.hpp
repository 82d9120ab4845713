#pragma once

#include <utility>
#include <vector>

#include "granular/universe.hpp"

namespace granular {

/// A binary relation on a universe, stored as successor sets R(x) = {y | xRy}.
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Relation(UniversePtr universe, std::vector<Subset> successors)
      : universe_(std::move(universe)), successors_(std::move(successors)) {
    if (!universe_) throw InvalidUniverse("relation requires a universe");
    if (successors_.size() != universe_->size()) throw UniverseMismatch("successor list length differs from universe size");
    for (const auto& s : successors_) {
      if (s.universe_size() != universe_->size()) throw UniverseMismatch("successor set does not belong to the universe");
    }
  }

  static Relation empty(const UniversePtr& universe) {
    return Relation(universe, std::vector<Subset>(universe->size(), Subset::empty(universe->size())));
  }

  static Relation identity(const UniversePtr& universe) {
    std::vector<Subset> succ;
    for (std::size_t x = 0; x < universe->size(); ++x) succ.push_back(Subset::singleton(universe->size(), x));
    return Relation(universe, std::move(succ));
  }

  static Relation from_pairs(const UniversePtr& universe, const std::vector<Pair>& pairs) {
    auto rel = empty(universe);
    for (auto [x, y] : pairs) {
      if (x >= universe->size() || y >= universe->size()) throw UnknownElement("relation pair outside the universe");
      rel.successors_[x] = rel.successors_[x].with(y);
    }
    return rel;
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }

  const Subset& successors(std::size_t x) const {
    if (x >= successors_.size()) throw UnknownElement("element index " + std::to_string(x) + " out of range");
    return successors_[x];
  }
  const std::vector<Subset>& successor_sets() const noexcept { return successors_; }

  bool holds(std::size_t x, std::size_t y) const { return successors(x).contains(y); }

  /// R^-1 = {(y, x) | xRy}.
  Relation inverse() const {
    const auto n = universe_size();
    std::vector<Subset> inv(n, Subset::empty(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (auto y : successors_[x]) inv[y] = inv[y].with(x);
    }
    return Relation(universe_, std::move(inv));
  }

  Relation reflexive_closure() const {
    auto succ = successors_;
    for (std::size_t x = 0; x < succ.size(); ++x) succ[x] = succ[x].with(x);
    return Relation(universe_, std::move(succ));
  }

  bool is_reflexive() const {
    for (std::size_t x = 0; x < successors_.size(); ++x) {
      if (!successors_[x].contains(x)) return false;
    }
    return true;
  }

  bool is_symmetric() const { return *this == inverse(); }

  bool is_transitive() const {
    for (const auto& s : successors_) {
      for (auto y : s) {
        if (!successors_[y].is_subset_of(s)) return false;
      }
    }
    return true;
  }

  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_tolerance() const { return is_reflexive() && is_symmetric(); }

  /// All pairs (x, y) with xRy, ordered by x then y.
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t x = 0; x < successors_.size(); ++x) {
      for (auto y : successors_[x]) out.emplace_back(x, y);
    }
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return same_universe(a.universe_, b.universe_) && a.successors_ == b.successors_;
  }

 private:
  UniversePtr universe_;
  std::vector<Subset> successors_;
};

/// A reflexive and symmetric relation.
class ToleranceRelation {
 public:
  explicit ToleranceRelation(Relation relation) : relation_(std::move(relation)) {
    if (!relation_.is_reflexive()) throw InvalidTolerance("tolerance relation must be reflexive");
    if (!relation_.is_symmetric()) throw InvalidTolerance("tolerance relation must be symmetric");
  }

  const Relation& relation() const noexcept { return relation_; }
  const UniversePtr& universe() const noexcept { return relation_.universe(); }
  std::size_t universe_size() const noexcept { return relation_.universe_size(); }

  /// The T-class T(x).
  const Subset& tclass(std::size_t x) const { return relation_.successors(x); }
  bool holds(std::size_t x, std::size_t y) const { return relation_.holds(x, y); }

  friend bool operator==(const ToleranceRelation& a, const ToleranceRelation& b) { return a.relation_ == b.relation_; }

 private:
  Relation relation_;
};

}  // namespace granular
