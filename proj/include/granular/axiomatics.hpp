#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "granular/approx.hpp"
#include "granular/operator_table.hpp"
#include "granular/tolerance.hpp"

namespace granular {

/// Axioms for candidate upper approximation operators H.
///   (1H)/(H1)  H(empty) = empty
///   (2H)/(H2)  X within H(X)
///   (3H)/(H3)  H distributes over unions
///   (4H)       y in H({x}) iff x in H({y})
///   (5H)       y in H({x}) implies some u has x, y in every H({z}) with u in H({z})
///   (H4)       H(H(X)) = H(X)
enum class Axiom { one_h, two_h, three_h, four_h, five_h, h1, h2, h3, h4 };

inline constexpr std::size_t kAxiomCount = 9;

inline constexpr std::array<Axiom, kAxiomCount> kAllAxioms = {Axiom::one_h, Axiom::two_h, Axiom::three_h,
                                                              Axiom::four_h, Axiom::five_h, Axiom::h1,
                                                              Axiom::h2, Axiom::h3, Axiom::h4};

inline constexpr std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::one_h: return "1H";
    case Axiom::two_h: return "2H";
    case Axiom::three_h: return "3H";
    case Axiom::four_h: return "4H";
    case Axiom::five_h: return "5H";
    case Axiom::h1: return "H1";
    case Axiom::h2: return "H2";
    case Axiom::h3: return "H3";
    case Axiom::h4: return "H4";
  }
  return "?";
}

/// Inputs that falsify an axiom: the offending subsets and/or elements.
struct AxiomWitness {
  std::vector<Subset> subsets;
  std::vector<std::size_t> elements;
};

struct AxiomReport {
  std::array<bool, kAxiomCount> holds{};
  std::array<std::optional<AxiomWitness>, kAxiomCount> witnesses{};

  bool holds_axiom(Axiom a) const { return holds[static_cast<std::size_t>(a)]; }
  const std::optional<AxiomWitness>& witness(Axiom a) const { return witnesses[static_cast<std::size_t>(a)]; }

  bool satisfies(std::span<const Axiom> axioms) const {
    for (auto a : axioms) {
      if (!holds_axiom(a)) return false;
    }
    return true;
  }
};

inline constexpr std::array<Axiom, 4> kFirstAxioms = {Axiom::one_h, Axiom::two_h, Axiom::three_h, Axiom::four_h};
inline constexpr std::array<Axiom, 5> kSecondAxioms = {Axiom::one_h, Axiom::two_h, Axiom::three_h, Axiom::four_h,
                                                       Axiom::five_h};
inline constexpr std::array<Axiom, 4> kTopologicalAxioms = {Axiom::h1, Axiom::h2, Axiom::h3, Axiom::h4};

/// The axiom set characterizing the upper operators of a kind.
inline std::span<const Axiom> required_axioms(OperatorKind k) {
  switch (k) {
    case OperatorKind::first: return kFirstAxioms;
    case OperatorKind::second: return kSecondAxioms;
    case OperatorKind::third:
    case OperatorKind::fourth: return kTopologicalAxioms;
  }
  return {};
}

namespace detail {

inline void record(AxiomReport& rep, Axiom a, std::optional<AxiomWitness> w) {
  const auto i = static_cast<std::size_t>(a);
  rep.holds[i] = !w.has_value();
  rep.witnesses[i] = std::move(w);
}

inline std::optional<AxiomWitness> find_empty_violation(const OperatorTable& h) {
  if (h.rows()[0].is_empty()) return std::nullopt;
  return AxiomWitness{{Subset::empty(h.universe_size())}, {}};
}

inline std::optional<AxiomWitness> find_extensive_violation(const OperatorTable& h) {
  const auto n = h.universe_size();
  for (std::size_t m = 0; m < h.rows().size(); ++m) {
    const Subset x(n, static_cast<Mask>(m));
    if (!x.is_subset_of(h.rows()[m])) return AxiomWitness{{x}, {}};
  }
  return std::nullopt;
}

// Union preservation on a finite universe: all pairs, and every subset as the
// union of its singletons (the empty union is covered by the empty axiom).
inline std::optional<AxiomWitness> find_additivity_violation(const OperatorTable& h) {
  const auto n = h.universe_size();
  const auto& rows = h.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (rows[a | b] != (rows[a] | rows[b])) {
        return AxiomWitness{{Subset(n, static_cast<Mask>(a)), Subset(n, static_cast<Mask>(b))}, {}};
      }
    }
  }
  for (std::size_t m = 1; m < rows.size(); ++m) {
    const Subset x(n, static_cast<Mask>(m));
    auto singles = Subset::empty(n);
    for (auto e : x) singles |= h.at_element(e);
    if (singles != rows[m]) return AxiomWitness{{x}, {}};
  }
  return std::nullopt;
}

inline std::optional<AxiomWitness> find_symmetry_violation(const OperatorTable& h) {
  const auto n = h.universe_size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (h.at_element(x).contains(y) != h.at_element(y).contains(x)) return AxiomWitness{{}, {x, y}};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomWitness> find_kernel_violation(const OperatorTable& h) {
  const auto n = h.universe_size();
  std::vector<Subset> kernels;
  for (std::size_t u = 0; u < n; ++u) {
    auto acc = Subset::full(n);
    for (std::size_t z = 0; z < n; ++z) {
      if (h.at_element(z).contains(u)) acc &= h.at_element(z);
    }
    kernels.push_back(acc);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : h.at_element(x)) {
      bool found = false;
      for (const auto& k : kernels) {
        if (k.contains(x) && k.contains(y)) {
          found = true;
          break;
        }
      }
      if (!found) return AxiomWitness{{}, {x, y}};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomWitness> find_idempotence_violation(const OperatorTable& h) {
  const auto n = h.universe_size();
  for (std::size_t m = 0; m < h.rows().size(); ++m) {
    if (h(h.rows()[m]) != h.rows()[m]) return AxiomWitness{{Subset(n, static_cast<Mask>(m))}, {}};
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks every axiom exhaustively over all subsets and element pairs.
inline AxiomReport check_axioms(const OperatorTable& h) {
  AxiomReport rep;
  auto empty = detail::find_empty_violation(h);
  auto extensive = detail::find_extensive_violation(h);
  auto additive = detail::find_additivity_violation(h);
  detail::record(rep, Axiom::one_h, empty);
  detail::record(rep, Axiom::two_h, extensive);
  detail::record(rep, Axiom::three_h, additive);
  detail::record(rep, Axiom::four_h, detail::find_symmetry_violation(h));
  detail::record(rep, Axiom::five_h, detail::find_kernel_violation(h));
  detail::record(rep, Axiom::h1, std::move(empty));
  detail::record(rep, Axiom::h2, std::move(extensive));
  detail::record(rep, Axiom::h3, std::move(additive));
  detail::record(rep, Axiom::h4, detail::find_idempotence_violation(h));
  return rep;
}

/// Axioms missing for a reconstruction, with the full report attached.
class ReconstructionError : public AxiomPreconditionError {
 public:
  ReconstructionError(OperatorKind kind, AxiomReport report, std::vector<Axiom> missing)
      : AxiomPreconditionError(message(kind, missing)), report_(std::move(report)), missing_(std::move(missing)) {}

  const AxiomReport& report() const noexcept { return report_; }
  const std::vector<Axiom>& missing() const noexcept { return missing_; }

 private:
  static std::string message(OperatorKind kind, const std::vector<Axiom>& missing) {
    std::string out = "table does not satisfy the axioms for the ";
    out += to_string(kind);
    out += " kind; failing:";
    for (auto a : missing) {
      out += " (";
      out += to_string(a);
      out += ')';
    }
    return out;
  }

  AxiomReport report_;
  std::vector<Axiom> missing_;
};

/// `canonical` follows the constructive choice for each kind; `alternate`
/// picks another valid covering where one is known (pairs {x, y} with
/// y in H({x}) for the first kind, the sets H({x}) for the second).
enum class ReconstructStrategy { canonical, alternate };

/// The relation x T y iff y in H({x}).
inline Relation singleton_relation(const OperatorTable& h) {
  std::vector<Subset> succ;
  for (std::size_t x = 0; x < h.universe_size(); ++x) succ.push_back(h.at_element(x));
  return Relation(h.universe(), std::move(succ));
}

/// A covering whose upper operator of `kind` equals `h`.
inline Covering reconstruct(OperatorKind kind, const OperatorTable& h,
                            ReconstructStrategy strategy = ReconstructStrategy::canonical) {
  auto report = check_axioms(h);
  std::vector<Axiom> missing;
  for (auto a : required_axioms(kind)) {
    if (!report.holds_axiom(a)) missing.push_back(a);
  }
  if (!missing.empty()) throw ReconstructionError(kind, std::move(report), std::move(missing));

  const auto n = h.universe_size();
  std::vector<Subset> out;
  switch (kind) {
    case OperatorKind::first:
    case OperatorKind::second: {
      const ToleranceRelation t(singleton_relation(h));
      if (strategy == ReconstructStrategy::canonical) return blocks(t);
      if (kind == OperatorKind::second) return classes(t);
      for (std::size_t x = 0; x < n; ++x) {
        for (auto y : t.tclass(x)) out.push_back(Subset::of(n, {x, y}));
      }
      break;
    }
    case OperatorKind::third:
      for (std::size_t u = 0; u < n; ++u) out.push_back(h.at_element(u));
      break;
    case OperatorKind::fourth:
      // Complements of the fixed points, leaving out the empty complement of U.
      for (std::size_t m = 0; m < h.rows().size(); ++m) {
        const Subset k(n, static_cast<Mask>(m));
        if (h.rows()[m] == k && !k.is_full()) out.push_back(k.complement());
      }
      break;
  }
  return Covering(h.universe(), std::move(out));
}

}  // namespace granular
