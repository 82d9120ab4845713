#pragma once

#include <optional>
#include <vector>

#include "granular/operator_table.hpp"
#include "granular/relation.hpp"

namespace granular {

/// Cl_R(X) = X u {x | R(x) meets X}.
inline Subset cl_from_relation(const Relation& r, const Subset& x) {
  if (x.universe_size() != r.universe_size()) throw UniverseMismatch();
  auto out = x;
  for (std::size_t u = 0; u < r.universe_size(); ++u) {
    if (r.successors(u).intersects(x)) out = out.with(u);
  }
  return out;
}

/// Int_R(X) = {x in X | R(x) within X} = -Cl_R(-X).
inline Subset int_from_relation(const Relation& r, const Subset& x) {
  if (x.universe_size() != r.universe_size()) throw UniverseMismatch();
  auto out = Subset::empty(r.universe_size());
  for (auto u : x) {
    if (r.successors(u).is_subset_of(x)) out = out.with(u);
  }
  return out;
}

/// N(u) = {u} u R(u).
inline Subset neighbourhood(const Relation& r, std::size_t u) { return r.successors(u).with(u); }

inline OperatorTable closure_table(const Relation& r) {
  return OperatorTable::tabulate(r.universe(), [&](const Subset& x) { return cl_from_relation(r, x); });
}

inline OperatorTable interior_table(const Relation& r) {
  return OperatorTable::tabulate(r.universe(), [&](const Subset& x) { return int_from_relation(r, x); });
}

struct ClosureReport {
  bool c1 = false;  // Cl(empty) = empty
  bool c2 = false;  // X within Cl(X)
  bool c3 = false;  // Cl(X u Y) = Cl(X) u Cl(Y)
  bool c4 = false;  // Cl(X) = union of Cl({x}), x in X
  bool c5 = false;  // Cl(Cl(X)) = Cl(X)
  // C4 for arbitrary families: empty family plus every pair of subsets. On a
  // finite universe this must agree with c4.
  bool c4_families = false;

  bool cech() const { return c1 && c2 && c3; }
  bool quasi_discrete() const { return c1 && c2 && c3 && c4; }
  bool topological() const { return c1 && c2 && c3 && c5; }
};

inline ClosureReport check_closure_axioms(const OperatorTable& cl) {
  const auto n = cl.universe_size();
  const auto& rows = cl.rows();
  const std::size_t count = rows.size();
  ClosureReport rep;
  rep.c1 = rows[0].is_empty();
  rep.c2 = true;
  rep.c4 = true;
  rep.c5 = true;
  for (std::size_t m = 0; m < count; ++m) {
    const Subset x(n, static_cast<Mask>(m));
    if (!x.is_subset_of(rows[m])) rep.c2 = false;
    auto singles = Subset::empty(n);
    for (auto e : x) singles |= cl.at_element(e);
    if (singles != rows[m]) rep.c4 = false;
    if (cl(rows[m]) != rows[m]) rep.c5 = false;
  }
  rep.c3 = true;
  for (std::size_t a = 0; a < count && rep.c3; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (rows[a | b] != (rows[a] | rows[b])) {
        rep.c3 = false;
        break;
      }
    }
  }
  rep.c4_families = rep.c1 && rep.c3;
  return rep;
}

/// The least X with u in Int(X), where Int(X) = -Cl(-X), or nullopt when the
/// neighbourhoods of u have no least element. Requires C1-C3.
inline std::optional<Subset> minimal_neighbourhood(const OperatorTable& cl, std::size_t u) {
  const auto n = cl.universe_size();
  if (u >= n) throw UnknownElement("element index " + std::to_string(u) + " out of range");
  if (!check_closure_axioms(cl).cech()) throw AxiomPreconditionError("minimal neighbourhood requires axioms C1-C3");
  auto meet = Subset::full(n);
  bool any = false;
  for_each_subset(n, [&](const Subset& x) {
    if (cl(x.complement()).complement().contains(u)) {
      meet &= x;
      any = true;
    }
  });
  if (!any || !cl(meet.complement()).complement().contains(u)) return std::nullopt;
  return meet;
}

/// The reflexive relation R with x R y iff x in Cl({y}). For a table passing
/// C1-C4, cl_from_relation over it reproduces the table.
inline Relation relation_from_closure(const OperatorTable& cl) {
  const auto n = cl.universe_size();
  std::vector<Subset> succ(n, Subset::empty(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (auto x : cl.at_element(y).with(y)) succ[x] = succ[x].with(y);
  }
  return Relation(cl.universe(), std::move(succ));
}

}  // namespace granular
