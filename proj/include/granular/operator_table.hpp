#pragma once

#include <utility>
#include <vector>

#include "granular/universe.hpp"

namespace granular {

/// Tables store 2^n rows, so they are limited to small universes.
inline constexpr std::size_t kMaxTableUniverseSize = 5;

/// A total map from every subset of a universe to a subset, indexed by the
/// input mask. Stands in for candidate closure, interior and upper operators.
class OperatorTable {
 public:
  OperatorTable(UniversePtr universe, std::vector<Subset> rows) : universe_(std::move(universe)), rows_(std::move(rows)) {
    if (!universe_) throw InvalidUniverse("operator table requires a universe");
    const auto n = universe_->size();
    if (n > kMaxTableUniverseSize) {
      throw OutOfRange("operator tables support at most " + std::to_string(kMaxTableUniverseSize) + " elements");
    }
    if (rows_.size() != (std::size_t{1} << n)) throw NonTotalTable("operator table must have one row per subset");
    for (const auto& r : rows_) {
      if (r.universe_size() != n) throw UniverseMismatch("table row does not belong to the universe");
    }
  }

  /// Materializes `op` over every subset.
  template <class Op>
  static OperatorTable tabulate(const UniversePtr& universe, Op&& op) {
    const auto n = universe->size();
    if (n > kMaxTableUniverseSize) {
      throw OutOfRange("operator tables support at most " + std::to_string(kMaxTableUniverseSize) + " elements");
    }
    std::vector<Subset> rows;
    rows.reserve(std::size_t{1} << n);
    for_each_subset(n, [&](const Subset& x) { rows.push_back(op(x)); });
    return OperatorTable(universe, std::move(rows));
  }

  static OperatorTable identity(const UniversePtr& universe) {
    return tabulate(universe, [](const Subset& x) { return x; });
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }
  const std::vector<Subset>& rows() const noexcept { return rows_; }

  const Subset& operator()(const Subset& input) const {
    if (input.universe_size() != universe_size()) throw UniverseMismatch("table input from a different universe");
    return rows_[input.bits()];
  }

  /// H({x}).
  const Subset& at_element(std::size_t x) const { return (*this)(Subset::singleton(universe_size(), x)); }

  /// X -> -H(-X).
  OperatorTable dual() const {
    return tabulate(universe_, [&](const Subset& x) { return (*this)(x.complement()).complement(); });
  }

  friend bool operator==(const OperatorTable& a, const OperatorTable& b) {
    return same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
  }

 private:
  UniversePtr universe_;
  std::vector<Subset> rows_;
};

}  // namespace granular
