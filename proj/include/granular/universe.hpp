#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "granular/error.hpp"

namespace granular {

/// Largest universe supported by the bitmask set algebra.
inline constexpr std::size_t kMaxUniverseSize = 24;

using Mask = std::uint32_t;

inline constexpr Mask full_mask(std::size_t n) {
  return n == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << n) - 1);
}

/// An ordered finite set of distinctly named elements. The position of a name
/// is its index; indices are dense and follow input order.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidUniverse("universe must contain at least one element");
    if (names_.size() > kMaxUniverseSize) {
      throw InvalidUniverse("universe of " + std::to_string(names_.size()) +
                            " elements exceeds the limit of " + std::to_string(kMaxUniverseSize));
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) {
        throw InvalidUniverse("duplicate element name '" + names_[i] + "'");
      }
    }
  }

  static std::shared_ptr<const Universe> make(std::vector<std::string> names) {
    return std::make_shared<const Universe>(std::move(names));
  }

  /// Universe {"1", ..., "n"}.
  static std::shared_ptr<const Universe> numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return make(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Mask mask() const noexcept { return full_mask(names_.size()); }

  const std::string& name(std::size_t index) const {
    if (index >= names_.size()) throw UnknownElement("element index " + std::to_string(index) + " out of range");
    return names_[index];
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElement("unknown element '" + std::string(name) + "'");
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatch();
}

/// A subset of a universe of `universe_size()` elements, stored as a membership
/// mask. Ordering compares masks first, which is the canonical block order.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    Mask rest_ = 0;
  };

  Subset() = default;

  Subset(std::size_t universe_size, Mask bits) : bits_(bits), size_(static_cast<std::uint8_t>(universe_size)) {
    if (universe_size > kMaxUniverseSize) throw OutOfRange("subset universe too large");
    if ((bits & ~full_mask(universe_size)) != 0) throw UnknownElement("subset mask has bits outside the universe");
  }

  static Subset empty(std::size_t n) { return Subset(n, 0); }
  static Subset full(std::size_t n) { return Subset(n, full_mask(n)); }
  static Subset singleton(std::size_t n, std::size_t element) {
    if (element >= n) throw UnknownElement("element index " + std::to_string(element) + " out of range");
    return Subset(n, Mask{1} << element);
  }
  static Subset of(std::size_t n, std::initializer_list<std::size_t> elements) {
    Mask bits = 0;
    for (auto e : elements) bits |= singleton(n, e).bits();
    return Subset(n, bits);
  }

  Mask bits() const noexcept { return bits_; }
  std::size_t universe_size() const noexcept { return size_; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(size_); }
  bool contains(std::size_t element) const noexcept { return element < size_ && ((bits_ >> element) & 1U) != 0; }

  Subset with(std::size_t element) const { return *this | singleton(size_, element); }
  Subset without(std::size_t element) const { return *this - singleton(size_, element); }
  Subset complement() const { return Subset(size_, ~bits_ & full_mask(size_)); }

  bool is_subset_of(const Subset& other) const {
    check(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const Subset& other) const {
    check(other);
    return (bits_ & other.bits_) != 0;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<std::size_t> elements() const { return {begin(), end()}; }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check(b);
    return Subset(a.size_, a.bits_ | b.bits_, Unchecked{});
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check(b);
    return Subset(a.size_, a.bits_ & b.bits_, Unchecked{});
  }
  friend Subset operator-(const Subset& a, const Subset& b) {
    a.check(b);
    return Subset(a.size_, a.bits_ & ~b.bits_, Unchecked{});
  }
  Subset& operator|=(const Subset& b) { return *this = *this | b; }
  Subset& operator&=(const Subset& b) { return *this = *this & b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  struct Unchecked {};
  Subset(std::size_t n, Mask bits, Unchecked) : bits_(bits), size_(static_cast<std::uint8_t>(n)) {}

  void check(const Subset& other) const {
    if (size_ != other.size_) throw UniverseMismatch("subsets of universes of different size");
  }

  Mask bits_ = 0;
  std::uint8_t size_ = 0;
};

/// Calls `f(Subset)` for every subset of an `n`-element universe in mask order.
template <class F>
void for_each_subset(std::size_t n, F&& f) {
  if (n > kMaxUniverseSize) throw OutOfRange("universe too large to enumerate subsets");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) f(Subset(n, static_cast<Mask>(m)));
}

}  // namespace granular
