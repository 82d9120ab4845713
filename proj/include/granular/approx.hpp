#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "granular/closure.hpp"
#include "granular/family.hpp"
#include "granular/granulation.hpp"
#include "granular/operator_table.hpp"

namespace granular {

/// Upper approximation {x | R(x) meets X}.
inline Subset rel_upper(const Relation& r, const Subset& x) {
  if (x.universe_size() != r.universe_size()) throw UniverseMismatch();
  auto out = Subset::empty(r.universe_size());
  for (std::size_t u = 0; u < r.universe_size(); ++u) {
    if (r.successors(u).intersects(x)) out = out.with(u);
  }
  return out;
}

/// Lower approximation {x | R(x) within X}.
inline Subset rel_lower(const Relation& r, const Subset& x) {
  if (x.universe_size() != r.universe_size()) throw UniverseMismatch();
  auto out = Subset::empty(r.universe_size());
  for (std::size_t u = 0; u < r.universe_size(); ++u) {
    if (r.successors(u).is_subset_of(x)) out = out.with(u);
  }
  return out;
}

/// The four covering approximation pairs: FH/FL, SH/SL, TH/TL, XH/XL.
enum class OperatorKind { first, second, third, fourth };

inline constexpr std::array<OperatorKind, 4> kAllOperatorKinds = {OperatorKind::first, OperatorKind::second,
                                                                  OperatorKind::third, OperatorKind::fourth};

inline constexpr std::string_view to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::first: return "first";
    case OperatorKind::second: return "second";
    case OperatorKind::third: return "third";
    case OperatorKind::fourth: return "fourth";
  }
  return "?";
}

inline std::optional<OperatorKind> parse_operator_kind(std::string_view s) {
  for (auto k : kAllOperatorKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// Covering approximation operators of one covering. The four upper
/// operators are upper approximations over, respectively, the induced
/// tolerance, the tolerance of the point closure system, the specialization
/// preorder (successors are up-sets) and its dual (successors are down-sets).
class Approximator {
 public:
  explicit Approximator(Covering beta)
      : beta_(std::move(beta)),
        profile_(beta_),
        down_system_(point_closure_system(beta_)),
        relations_{profile_.star_relation(), induced_relation(down_system_), profile_.up_relation(),
                   profile_.down_relation()} {}

  const Covering& covering() const noexcept { return beta_; }
  const GranuleProfile& profile() const noexcept { return profile_; }
  const Covering& point_closures() const noexcept { return down_system_; }

  /// The relation whose upper/lower approximations give this kind.
  const Relation& relation(OperatorKind k) const { return relations_[static_cast<std::size_t>(k)]; }

  Subset upper(OperatorKind k, const Subset& x) const { return rel_upper(relation(k), check(x)); }
  Subset lower(OperatorKind k, const Subset& x) const { return rel_lower(relation(k), check(x)); }

  OperatorTable upper_table(OperatorKind k) const {
    return OperatorTable::tabulate(beta_.universe(), [&](const Subset& x) { return upper(k, x); });
  }
  OperatorTable lower_table(OperatorKind k) const {
    return OperatorTable::tabulate(beta_.universe(), [&](const Subset& x) { return lower(k, x); });
  }

 private:
  const Subset& check(const Subset& x) const {
    if (x.universe_size() != beta_.universe_size()) throw UniverseMismatch();
    return x;
  }

  Covering beta_;
  GranuleProfile profile_;
  Covering down_system_;
  std::array<Relation, 4> relations_;
};

inline Subset covering_upper(OperatorKind k, const Covering& beta, const Subset& x) {
  return Approximator(beta).upper(k, x);
}

inline Subset covering_lower(OperatorKind k, const Covering& beta, const Subset& x) {
  return Approximator(beta).lower(k, x);
}

/// The operators evaluated straight from their set-builder definitions over
/// blocks and down-granules, without going through any relation.
namespace definitional {

inline Subset upper(OperatorKind k, const Covering& beta, const Subset& x) {
  if (x.universe_size() != beta.universe_size()) throw UniverseMismatch();
  const auto n = beta.universe_size();
  auto out = Subset::empty(n);
  switch (k) {
    case OperatorKind::first:
      for (const auto& b : beta) {
        if (b.intersects(x)) out |= b;
      }
      break;
    case OperatorKind::second:
      for (std::size_t u = 0; u < n; ++u) {
        const auto down = point_closure(beta, u);
        if (down.intersects(x)) out |= down;
      }
      break;
    case OperatorKind::third:
      for (auto u : x) out |= point_closure(beta, u);
      break;
    case OperatorKind::fourth:
      for (std::size_t u = 0; u < n; ++u) {
        if (point_closure(beta, u).intersects(x)) out = out.with(u);
      }
      break;
  }
  return out;
}

inline Subset lower(OperatorKind k, const Covering& beta, const Subset& x) {
  if (x.universe_size() != beta.universe_size()) throw UniverseMismatch();
  const auto n = beta.universe_size();
  auto out = Subset::empty(n);
  for (std::size_t v = 0; v < n; ++v) {
    bool in = true;
    switch (k) {
      case OperatorKind::first:
        for (const auto& b : beta) {
          if (b.contains(v) && !b.is_subset_of(x)) in = false;
        }
        break;
      case OperatorKind::second:
        for (std::size_t u = 0; u < n; ++u) {
          const auto down = point_closure(beta, u);
          if (down.contains(v) && !down.is_subset_of(x)) in = false;
        }
        break;
      case OperatorKind::third:
        // Every u whose down-granule contains v must itself lie in X.
        for (std::size_t u = 0; u < n; ++u) {
          if (point_closure(beta, u).contains(v) && !x.contains(u)) in = false;
        }
        break;
      case OperatorKind::fourth:
        in = point_closure(beta, v).is_subset_of(x);
        break;
    }
    if (in) out = out.with(v);
  }
  return out;
}

}  // namespace definitional

}  // namespace granular
