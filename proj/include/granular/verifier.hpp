#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "granular/approx.hpp"
#include "granular/axiomatics.hpp"
#include "granular/closure.hpp"
#include "granular/enumerate.hpp"
#include "granular/granulation.hpp"
#include "granular/io.hpp"
#include "granular/tolerance.hpp"

namespace granular::verify {

using Json = nlohmann::json;

/// What a claim quantifies over.
enum class Domain { coverings, tolerances, relations, tables };

/// A theorem must hold on every instance. A negative claim is a "does not
/// hold in general" statement: a witness exists exactly when n reaches
/// `min_witness_n`.
enum class ClaimKind { theorem, negative };

inline constexpr std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::coverings: return "coverings";
    case Domain::tolerances: return "tolerances";
    case Domain::relations: return "relations";
    case Domain::tables: return "tables";
  }
  return "?";
}

inline constexpr std::string_view to_string(ClaimKind k) { return k == ClaimKind::theorem ? "theorem" : "negative"; }

struct ClaimInfo {
  std::string_view id;
  ClaimKind kind;
  Domain domain;
  std::string_view statement;
  std::size_t min_witness_n = 0;
};

struct ClaimResult {
  std::string id;
  ClaimKind kind = ClaimKind::theorem;
  Domain domain = Domain::coverings;
  std::string statement;
  std::size_t n = 0;
  std::size_t instances = 0;
  /// Instances on which the claim's hypothesis held.
  std::size_t applicable = 0;
  std::size_t failure_count = 0;
  /// Serialized counterexamples, the first kMaxRecordedFailures of them.
  std::vector<Json> failures;
  std::optional<Json> witness;
  bool expected_witness = false;

  bool passed() const {
    if (kind == ClaimKind::theorem) return failure_count == 0;
    return witness.has_value() == expected_witness;
  }
};

inline constexpr std::size_t kMaxRecordedFailures = 8;

class UnknownClaim : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Result of checking one instance.
struct Outcome {
  bool applicable = true;
  std::optional<Json> failure;
};

inline Outcome pass() { return {}; }
inline Outcome vacuous() { return {false, std::nullopt}; }
inline Outcome fail(Json detail) { return {true, std::move(detail)}; }

/// Every table considered for completeness claims: all extensive tables for
/// n <= 3, all additive extensive tables for n = 4.
template <class F>
void for_each_candidate_table(std::size_t n, F&& visit) {
  if (n <= kMaxExtensiveTableEnumeration) {
    for_each_extensive_table(n, visit);
  } else {
    for_each_additive_table(n, visit);
  }
}

namespace detail {

inline Json subset_json(const Universe& u, const Subset& s) { return io::to_json(u, s); }

inline Json mismatch(const Universe& u, std::string what, const Subset& expected, const Subset& actual) {
  return Json{{"what", std::move(what)}, {"expected", subset_json(u, expected)}, {"actual", subset_json(u, actual)}};
}

template <class T>
Json subject_json(const T& subject);

template <>
inline Json subject_json(const Covering& c) {
  return Json{{"covering", io::to_json(c)}};
}
template <>
inline Json subject_json(const ToleranceRelation& t) {
  return Json{{"tolerance", io::to_json(t.relation())}};
}
template <>
inline Json subject_json(const Relation& r) {
  return Json{{"relation", io::to_json(r)}};
}
template <>
inline Json subject_json(const OperatorTable& t) {
  return Json{{"table", io::to_json(t)}};
}

template <Domain D, class F>
void for_each_in(std::size_t n, F&& visit) {
  if constexpr (D == Domain::coverings) {
    for_each_covering(n, visit);
  } else if constexpr (D == Domain::tolerances) {
    for_each_tolerance(n, visit);
  } else if constexpr (D == Domain::relations) {
    for_each_relation(n, visit);
  } else {
    for_each_candidate_table(n, visit);
  }
}

template <Domain D>
struct SubjectOf;
template <>
struct SubjectOf<Domain::coverings> {
  using type = Covering;
};
template <>
struct SubjectOf<Domain::tolerances> {
  using type = ToleranceRelation;
};
template <>
struct SubjectOf<Domain::relations> {
  using type = Relation;
};
template <>
struct SubjectOf<Domain::tables> {
  using type = OperatorTable;
};

}  // namespace detail

/// A registered claim and the procedure that checks it for a given n.
struct Claim {
  ClaimInfo info;
  std::function<ClaimResult(std::size_t)> run;
};

namespace detail {

template <Domain D, class Check>
Claim theorem(std::string_view id, std::string_view statement, Check check) {
  using Subject = typename SubjectOf<D>::type;
  ClaimInfo info{id, ClaimKind::theorem, D, statement, 0};
  return Claim{info, [check](std::size_t n) {
                 ClaimResult r;
                 for_each_in<D>(n, [&](const Subject& s) {
                   ++r.instances;
                   Outcome o = check(s);
                   if (o.applicable) ++r.applicable;
                   if (!o.failure) return;
                   ++r.failure_count;
                   if (r.failures.size() < kMaxRecordedFailures) {
                     auto j = subject_json(s);
                     j["detail"] = std::move(*o.failure);
                     r.failures.push_back(std::move(j));
                   }
                 });
                 return r;
               }};
}

// A negative claim's search stops at the first witness in enumeration order.
template <Domain D, class Witness>
Claim negative(std::string_view id, std::string_view statement, std::size_t min_witness_n, Witness witness) {
  using Subject = typename SubjectOf<D>::type;
  ClaimInfo info{id, ClaimKind::negative, D, statement, min_witness_n};
  return Claim{info, [witness](std::size_t n) {
                 ClaimResult r;
                 bool found = false;
                 for_each_in<D>(n, [&](const Subject& s) {
                   if (found) return;
                   ++r.instances;
                   ++r.applicable;
                   if (auto w = witness(s)) {
                     auto j = subject_json(s);
                     j["detail"] = std::move(*w);
                     r.witness = std::move(j);
                     found = true;
                   }
                 });
                 return r;
               }};
}

// ---------------------------------------------------------------------------
// Granular worlds of a covering.

inline Outcome check_refinement_chain(const Covering& b) {
  if (!refines(b, star_system(b))) return fail("covering does not refine its star system");
  if (!refines(point_closure_system(b), b)) return fail("point closure system does not refine the covering");
  return pass();
}

inline Outcome check_point_structure(const Covering& b) {
  const auto& u = *b.universe();
  const auto n = u.size();
  std::vector<Subset> down;
  for (std::size_t x = 0; x < n; ++x) down.push_back(point_closure(b, x));
  for (std::size_t x = 0; x < n; ++x) {
    auto joined = Subset::empty(n);
    auto met = Subset::full(n);
    for (std::size_t z = 0; z < n; ++z) {
      if (down[x].contains(z)) joined |= down[z];
      if (down[z].contains(x)) met &= down[z];
      if (down[x].contains(z) != down[z].is_subset_of(down[x])) {
        return fail(Json{{"what", "y in down(x) iff down(y) within down(x)"}, {"x", u.name(x)}, {"y", u.name(z)}});
      }
    }
    if (joined != down[x]) return fail(mismatch(u, "down(x) = union of down(z), z in down(x) at " + u.name(x), down[x], joined));
    if (met != down[x]) return fail(mismatch(u, "down(x) = meet of down(z), x in down(z) at " + u.name(x), down[x], met));
  }
  return pass();
}

inline Outcome check_p_idempotent(const Covering& b) {
  const auto p = point_closure_system(b);
  if (point_closure_system(p) != p) return fail("P(P(beta)) differs from P(beta)");
  return pass();
}

inline Outcome check_dual_preorder(const Covering& b) {
  if (specialization_preorder(family_complement(b)) != specialization_preorder(b).inverse()) {
    return fail("preorder of the complemented family is not the dual preorder");
  }
  return pass();
}

inline Outcome check_core_upset(const Covering& b) {
  const auto& u = *b.universe();
  const auto n = u.size();
  const auto preorder = specialization_preorder(b);
  for (std::size_t x = 0; x < n; ++x) {
    auto upset = Subset::empty(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (point_closure(b, y).contains(x)) upset = upset.with(y);
    }
    if (core(b, x) != upset) return fail(mismatch(u, "core(x) = {y | x in down(y)} at " + u.name(x), upset, core(b, x)));
    if (preorder.successors(x) != upset) {
      return fail(mismatch(u, "preorder successors = up-set at " + u.name(x), upset, preorder.successors(x)));
    }
  }
  return pass();
}

inline Covering family_of_successors(const Relation& r) { return Covering(r.universe(), r.successor_sets()); }

inline Outcome check_relational_characterization(const Covering& b) {
  const auto preorder = specialization_preorder(b);
  const auto tolerance = induced_tolerance(b);
  if (point_closure_system(b) != family_of_successors(preorder.inverse())) return fail("P(beta) != {dual preorder(x)}");
  if (core_system(b) != family_of_successors(preorder)) return fail("P(complement) != {preorder(x)}");
  if (star_system(b) != family_of_successors(tolerance.relation())) return fail("S(beta) != {T_beta(x)}");
  for (std::size_t x = 0; x < b.universe_size(); ++x) {
    if (tolerance.tclass(x) != star(b, x)) return fail(mismatch(*b.universe(), "T_beta(x) = star(x)", star(b, x), tolerance.tclass(x)));
  }
  if (classes(tolerance) != star_system(b)) return fail("classes of T_beta differ from S(beta)");
  return pass();
}

inline Outcome check_ps_beta(const Covering& b) {
  const auto t = induced_tolerance(b);
  const auto ps = point_closure_system(star_system(b));
  if (ps != kernel_system(t)) return fail("P(S(beta)) != P(T_beta)");
  if (!refines(point_closure_system(b), ps)) return fail("P(beta) does not refine P(S(beta))");
  for (std::size_t x = 0; x < b.universe_size(); ++x) {
    if (!point_closure(b, x).is_subset_of(kernel(t, x))) {
      return fail(mismatch(*b.universe(), "down(x) within kernel(x) at " + b.universe()->name(x), kernel(t, x), point_closure(b, x)));
    }
  }
  return pass();
}

inline Outcome check_ps_beta_blocks(const Covering& b) {
  const auto t = induced_tolerance(b);
  if (blocks(t) != b) return vacuous();
  if (point_closure_system(star_system(b)) != point_closure_system(b)) return fail("block family with P(S(beta)) != P(beta)");
  return pass();
}

inline Outcome check_sps_beta(const Covering& alpha) {
  const auto beta = point_closure_system(alpha);
  const auto t = induced_tolerance(beta);
  if (induced_tolerance(kernel_system(t)) != t) return fail("T_P(T_beta) != T_beta for beta = P(alpha)");
  const auto sp = star_system(beta);
  if (star_system(point_closure_system(sp)) != sp) return fail("S(P(S(P(alpha)))) != S(P(alpha))");
  return pass();
}

// ---------------------------------------------------------------------------
// Tolerance spaces.

inline Outcome check_block_class(const ToleranceRelation& t) {
  const auto& u = *t.universe();
  const auto n = u.size();
  const auto bl = blocks(t);
  for (std::size_t x = 0; x < n; ++x) {
    if (star(bl, x) != t.tclass(x)) return fail(mismatch(u, "T(x) = union of blocks containing x at " + u.name(x), t.tclass(x), star(bl, x)));
  }
  for (const auto& block : bl) {
    auto met = Subset::full(n);
    for (auto x : block) met &= t.tclass(x);
    if (met != block) return fail(mismatch(u, "B = meet of T(x), x in B", block, met));
  }
  return pass();
}

inline Outcome check_blocks_are_maximal_cliques(const ToleranceRelation& t) {
  const auto n = t.universe_size();
  std::vector<Subset> cliques;
  for_each_subset(n, [&](const Subset& s) {
    if (s.is_empty()) return;
    for (auto x : s) {
      if (!s.is_subset_of(t.tclass(x))) return;
    }
    cliques.push_back(s);
  });
  std::vector<Subset> maximal;
  for (const auto& c : cliques) {
    const bool dominated = std::any_of(cliques.begin(), cliques.end(), [&](const Subset& d) { return d != c && c.is_subset_of(d); });
    if (!dominated) maximal.push_back(c);
  }
  if (SubsetFamily(t.universe(), maximal) != blocks(t)) return fail("blocks differ from brute-force maximal cliques");
  return pass();
}

inline Outcome check_classes_star_blocks(const ToleranceRelation& t) {
  if (classes(t) != star_system(blocks(t))) return fail("classes(T) != S(blocks(T))");
  return pass();
}

inline Outcome check_kernel_routes(const ToleranceRelation& t) {
  const auto& u = *t.universe();
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (kernel(t, x) != kernel_via_blocks(t, x)) return fail(mismatch(u, "kernel via classes vs blocks at " + u.name(x), kernel(t, x), kernel_via_blocks(t, x)));
  }
  const auto ks = kernel_system(t);
  if (ks != point_closure_system(blocks(t)) || ks != point_closure_system(classes(t))) return fail("P(T) != P(blocks) or P(classes)");
  return pass();
}

inline Outcome check_kernel_unions(const ToleranceRelation& t) {
  const auto& u = *t.universe();
  const auto n = u.size();
  std::vector<Subset> ker;
  for (std::size_t y = 0; y < n; ++y) ker.push_back(kernel(t, y));
  auto join_over = [&](const Subset& s) {
    auto acc = Subset::empty(n);
    for (auto y : s) acc |= ker[y];
    return acc;
  };
  for (const auto& block : blocks(t)) {
    if (join_over(block) != block) return fail(mismatch(u, "B = union of kernels over B", block, join_over(block)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (join_over(t.tclass(x)) != t.tclass(x)) return fail(mismatch(u, "T(x) = union of kernels over T(x) at " + u.name(x), t.tclass(x), join_over(t.tclass(x))));
    auto around = Subset::empty(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (ker[y].contains(x)) around |= ker[y];
    }
    if (!around.is_subset_of(t.tclass(x))) return fail(mismatch(u, "union of kernels containing x within T(x) at " + u.name(x), t.tclass(x), around));
  }
  return pass();
}

inline Outcome check_block_roundtrip(const ToleranceRelation& t) {
  if (induced_tolerance(blocks(t)) != t) return fail("T_blocks(T) != T");
  return pass();
}

inline Outcome check_kernel_tolerance_inclusion(const ToleranceRelation& t) {
  const auto back = induced_tolerance(kernel_system(t));
  for (std::size_t x = 0; x < t.universe_size(); ++x) {
    if (!back.tclass(x).is_subset_of(t.tclass(x))) return fail(mismatch(*t.universe(), "T_P(T)(x) within T(x)", t.tclass(x), back.tclass(x)));
  }
  return pass();
}

inline Outcome check_kernel_condition_forward(const ToleranceRelation& t) {
  if (!kernel_condition(t)) return vacuous();
  if (induced_tolerance(kernel_system(t)) != t) return fail("kernel condition holds but T_P(T) != T");
  return pass();
}

inline Outcome check_kernel_condition_backward(const ToleranceRelation& t) {
  if (induced_tolerance(kernel_system(t)) != t) return vacuous();
  if (auto v = kernel_condition_violation(t)) {
    return fail(Json{{"what", "T_P(T) = T but pair lies in no kernel"}, {"a", t.universe()->name(v->first)}, {"b", t.universe()->name(v->second)}});
  }
  return pass();
}

// ---------------------------------------------------------------------------
// Approximation operators.

inline Relation independent_relation(OperatorKind k, const Covering& b) {
  switch (k) {
    case OperatorKind::first: return induced_tolerance(b).relation();
    case OperatorKind::second: return induced_tolerance(point_closure_system(b)).relation();
    case OperatorKind::third: return specialization_preorder(b);
    case OperatorKind::fourth: return specialization_preorder(b).inverse();
  }
  return Relation::empty(b.universe());
}

inline Outcome check_operator_routes(OperatorKind k, const Covering& b) {
  const Approximator ap(b);
  const auto r = independent_relation(k, b);
  const auto& u = *b.universe();
  std::optional<Json> bad;
  for_each_subset(b.universe_size(), [&](const Subset& x) {
    if (bad) return;
    const auto up = ap.upper(k, x);
    const auto lo = ap.lower(k, x);
    auto tag = [&](const char* what) { return std::string(what) + " at X=" + io::to_json(u, x).dump(); };
    if (rel_upper(r, x) != up) bad = mismatch(u, tag("upper vs relation upper"), rel_upper(r, x), up);
    else if (cl_from_relation(r, x) != up) bad = mismatch(u, tag("upper vs relation closure"), cl_from_relation(r, x), up);
    else if (definitional::upper(k, b, x) != up) bad = mismatch(u, tag("upper vs definition"), definitional::upper(k, b, x), up);
    else if (rel_lower(r, x) != lo) bad = mismatch(u, tag("lower vs relation lower"), rel_lower(r, x), lo);
    else if (int_from_relation(r, x) != lo) bad = mismatch(u, tag("lower vs relation interior"), int_from_relation(r, x), lo);
    else if (definitional::lower(k, b, x) != lo) bad = mismatch(u, tag("lower vs definition"), definitional::lower(k, b, x), lo);
  });
  if (bad) return fail(std::move(*bad));
  return pass();
}

inline Outcome check_dualities(const Covering& b) {
  const Approximator ap(b);
  const auto& u = *b.universe();
  std::optional<Json> bad;
  for (auto k : kAllOperatorKinds) {
    for_each_subset(b.universe_size(), [&](const Subset& x) {
      if (bad) return;
      const auto dual = ap.upper(k, x.complement()).complement();
      if (ap.lower(k, x) != dual) bad = mismatch(u, std::string(to_string(k)) + " lower = -upper(-X)", dual, ap.lower(k, x));
      const auto def_dual = definitional::upper(k, b, x.complement()).complement();
      if (!bad && definitional::lower(k, b, x) != def_dual) {
        bad = mismatch(u, std::string(to_string(k)) + " definitional lower = -upper(-X)", def_dual, definitional::lower(k, b, x));
      }
    });
  }
  if (bad) return fail(std::move(*bad));
  return pass();
}

inline Outcome check_second_special_case(const Covering& b) {
  const Approximator ap(b);
  const Approximator on_p(point_closure_system(b));
  if (ap.upper_table(OperatorKind::second) != on_p.upper_table(OperatorKind::first)) return fail("SH(beta) != FH(P(beta))");
  if (ap.lower_table(OperatorKind::second) != on_p.lower_table(OperatorKind::first)) return fail("SL(beta) != FL(P(beta))");
  return pass();
}

inline Outcome check_adjunction(const Covering& b) {
  const Approximator ap(b);
  const auto n = b.universe_size();
  const auto th = ap.upper_table(OperatorKind::third);
  const auto xl = ap.lower_table(OperatorKind::fourth);
  for (std::size_t a = 0; a < th.rows().size(); ++a) {
    for (std::size_t c = 0; c < th.rows().size(); ++c) {
      const Subset x(n, static_cast<Mask>(a));
      const Subset y(n, static_cast<Mask>(c));
      if (th(x).is_subset_of(y) != x.is_subset_of(xl(y))) {
        return fail(Json{{"what", "TH(X) within Y iff X within XL(Y)"}, {"X", io::to_json(*b.universe(), x)}, {"Y", io::to_json(*b.universe(), y)}});
      }
    }
  }
  return pass();
}

inline Outcome check_topological_idempotent(const Covering& b) {
  const Approximator ap(b);
  for (auto k : {OperatorKind::third, OperatorKind::fourth}) {
    const auto t = ap.upper_table(k);
    for (const auto& row : t.rows()) {
      if (t(row) != row) return fail(std::string(to_string(k)) + " upper operator is not idempotent");
    }
  }
  return pass();
}

// ---------------------------------------------------------------------------
// Axiomatic characterization.

inline Json axiom_list(const AxiomReport& rep, std::span<const Axiom> axioms) {
  Json out = Json::array();
  for (auto a : axioms) {
    if (!rep.holds_axiom(a)) out.push_back(std::string(to_string(a)));
  }
  return out;
}

inline Outcome check_soundness(OperatorKind k, const Covering& b) {
  const auto table = Approximator(b).upper_table(k);
  const auto rep = check_axioms(table);
  if (!rep.satisfies(required_axioms(k))) {
    return fail(Json{{"what", std::string(to_string(k)) + " upper table misses axioms"}, {"failing", axiom_list(rep, required_axioms(k))}});
  }
  return pass();
}

inline Outcome check_completeness(OperatorKind k, const OperatorTable& h) {
  if (!check_axioms(h).satisfies(required_axioms(k))) return vacuous();
  for (auto strategy : {ReconstructStrategy::canonical, ReconstructStrategy::alternate}) {
    const auto beta = reconstruct(k, h, strategy);
    if (Approximator(beta).upper_table(k) != h) {
      return fail(Json{{"what", std::string(to_string(k)) + " reconstruction does not reproduce the table"},
                       {"strategy", strategy == ReconstructStrategy::canonical ? "canonical" : "alternate"},
                       {"reconstructed", io::to_json(beta)}});
    }
  }
  return pass();
}

inline Outcome check_kernel_axiom_vs_condition(const Covering& b) {
  const bool axiom = check_axioms(Approximator(b).upper_table(OperatorKind::first)).holds_axiom(Axiom::five_h);
  const bool condition = kernel_condition(induced_tolerance(b));
  if (axiom != condition) return fail(Json{{"what", "(5H) on FH differs from the kernel condition on T_beta"}, {"5H", axiom}, {"kernel_condition", condition}});
  return pass();
}

// ---------------------------------------------------------------------------
// Closure operators.

inline Outcome check_relation_closure_sound(const Relation& r) {
  const auto table = closure_table(r);
  const auto rep = check_closure_axioms(table);
  if (!rep.quasi_discrete()) return fail("Cl_R fails one of C1-C4");
  if (rep.c4 != rep.c4_families) return fail("singleton and family forms of C4 disagree");
  if (relation_from_closure(table) != r.reflexive_closure()) return fail("relation recovered from Cl_R is not the reflexive closure of R");
  return pass();
}

inline Outcome check_closure_complete(const OperatorTable& cl) {
  const auto rep = check_closure_axioms(cl);
  if (rep.c4 != rep.c4_families) return fail("singleton and family forms of C4 disagree");
  if (!rep.quasi_discrete()) return vacuous();
  if (closure_table(relation_from_closure(cl)) != cl) return fail("table is not Cl_R of its recovered relation");
  return pass();
}

inline Outcome check_interior_duality(const Relation& r) {
  if (interior_table(r) != closure_table(r).dual()) return fail("Int_R differs from -Cl_R(-X)");
  return pass();
}

inline Outcome check_cl_int_neighbourhood(const OperatorTable& cl) {
  const auto rep = check_closure_axioms(cl);
  if (!rep.cech()) return vacuous();
  const auto n = cl.universe_size();
  bool all_minimal = true;
  for (std::size_t u = 0; u < n; ++u) {
    if (!minimal_neighbourhood(cl, u)) all_minimal = false;
  }
  if (all_minimal != rep.c4) return fail(Json{{"what", "C4 iff every element has a minimal neighbourhood"}, {"c4", rep.c4}});
  const auto in = cl.dual();
  bool meets = in(Subset::full(n)).is_full();
  for (std::size_t a = 0; a < in.rows().size() && meets; ++a) {
    for (std::size_t b = a + 1; b < in.rows().size(); ++b) {
      if (in.rows()[a & b] != (in.rows()[a] & in.rows()[b])) {
        meets = false;
        break;
      }
    }
  }
  if (meets != rep.c4) return fail(Json{{"what", "C4 iff Int preserves intersections"}, {"c4", rep.c4}});
  return pass();
}

inline Outcome check_symmetric_neighbourhood(const Relation& r) {
  const auto cl = closure_table(r);
  bool all_equal = true;
  for (std::size_t u = 0; u < r.universe_size(); ++u) {
    const auto minimal = minimal_neighbourhood(cl, u);
    if (!minimal || *minimal != neighbourhood(r, u)) return fail("minimal neighbourhood differs from {u} u R(u)");
    if (cl.at_element(u) != *minimal) all_equal = false;
  }
  if (all_equal != r.is_symmetric()) return fail(Json{{"what", "R symmetric iff Cl_R(u) = N(u) for all u"}, {"symmetric", r.is_symmetric()}});
  return pass();
}

inline Outcome check_reflexive_form(const Relation& r) {
  if (!r.is_reflexive()) return vacuous();
  for (std::size_t m = 0; m < (std::size_t{1} << r.universe_size()); ++m) {
    const Subset x(r.universe_size(), static_cast<Mask>(m));
    if (cl_from_relation(r, x) != rel_upper(r, x)) return fail(mismatch(*r.universe(), "Cl_R = upper approximation", rel_upper(r, x), cl_from_relation(r, x)));
  }
  return pass();
}

inline Outcome check_preorder_alexandroff(const Relation& r) {
  if (!r.is_reflexive()) return vacuous();
  const bool c5 = check_closure_axioms(closure_table(r)).c5;
  if (c5 != r.is_transitive()) return fail(Json{{"what", "reflexive R: Cl_R idempotent iff R transitive"}, {"c5", c5}});
  return pass();
}

// ---------------------------------------------------------------------------
// Negative claims.

inline std::optional<Json> kernel_union_strict(const ToleranceRelation& t) {
  const auto& u = *t.universe();
  const auto n = u.size();
  std::vector<Subset> ker;
  for (std::size_t y = 0; y < n; ++y) ker.push_back(kernel(t, y));
  for (std::size_t x = 0; x < n; ++x) {
    auto around = Subset::empty(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (ker[y].contains(x)) around |= ker[y];
    }
    if (around != t.tclass(x)) {
      return Json{{"element", u.name(x)}, {"union", subset_json(u, around)}, {"class", subset_json(u, t.tclass(x))}};
    }
  }
  return std::nullopt;
}

inline std::optional<Json> kernels_match_but_not_blocks(const Covering& b) {
  const auto t = induced_tolerance(b);
  for (std::size_t x = 0; x < b.universe_size(); ++x) {
    if (point_closure(b, x) != kernel(t, x)) return std::nullopt;
  }
  const auto bl = blocks(t);
  if (bl == b) return std::nullopt;
  return Json{{"blocks", io::to_json(bl)["blocks"]}};
}

inline std::optional<Json> not_idempotent(OperatorKind k, const Covering& b) {
  const auto t = Approximator(b).upper_table(k);
  if (auto w = check_axioms(t).witness(Axiom::h4)) {
    const auto& x = w->subsets.front();
    return Json{{"X", subset_json(*b.universe(), x)}, {"H(X)", subset_json(*b.universe(), t(x))}, {"H(H(X))", subset_json(*b.universe(), t(t(x)))}};
  }
  return std::nullopt;
}

inline std::optional<Json> complement_not_covering(const Covering& b) {
  const auto c = family_complement(b);
  if (is_covering(c)) return std::nullopt;
  return Json{{"complement", io::to_json(c)["blocks"]}};
}

inline std::optional<Json> third_fourth_differ(const Covering& b) {
  const auto h = Approximator(b).upper_table(OperatorKind::third);
  const auto third = reconstruct(OperatorKind::third, h);
  const auto fourth = reconstruct(OperatorKind::fourth, h);
  if (third == fourth) return std::nullopt;
  return Json{{"third", io::to_json(third)["blocks"]}, {"fourth", io::to_json(fourth)["blocks"]}};
}

inline std::optional<Json> kernel_system_loses_tolerance(const ToleranceRelation& t) {
  const auto back = induced_tolerance(kernel_system(t));
  if (back == t) return std::nullopt;
  return Json{{"T_P(T)", io::to_json(back.relation())["pairs"]}};
}

inline std::vector<Claim> build_registry() {
  using D = Domain;
  using K = OperatorKind;
  std::vector<Claim> c;
  c.push_back(theorem<D::coverings>("refinement-chain", "P(beta) refines beta and beta refines S(beta)", check_refinement_chain));
  c.push_back(theorem<D::coverings>("point-closure-structure", "y in down(x) iff down(y) within down(x); down(x) is the union and the meet of related down-sets", check_point_structure));
  c.push_back(theorem<D::coverings>("point-closure-idempotent", "P(P(beta)) = P(beta)", check_p_idempotent));
  c.push_back(theorem<D::coverings>("complement-dual-preorder", "the preorder of the complemented family is the dual preorder", check_dual_preorder));
  c.push_back(theorem<D::coverings>("core-up-set", "core(x) = {y | x <= y} = {y | x in down(y)}", check_core_upset));
  c.push_back(theorem<D::coverings>("relational-characterization", "P(beta) = {>=(x)}, P(beta^c) = {<=(x)}, S(beta) = {T_beta(x)} = classes(T_beta)", check_relational_characterization));
  c.push_back(theorem<D::coverings>("star-point-closure-kernels", "P(S(beta)) = P(T_beta), P(beta) refines it, down(x) within kernel(x)", check_ps_beta));
  c.push_back(theorem<D::coverings>("star-point-closure-blocks", "beta = blocks(T_beta) implies P(S(beta)) = P(beta)", check_ps_beta_blocks));
  c.push_back(theorem<D::coverings>("star-point-closure-fixpoint", "beta = P(alpha): T_P(T_beta) = T_beta and S(P(S(P(alpha)))) = S(P(alpha))", check_sps_beta));

  c.push_back(theorem<D::tolerances>("block-class-reconstruction", "T(x) = union of blocks containing x; B = meet of T(x) over x in B", check_block_class));
  c.push_back(theorem<D::tolerances>("blocks-maximal-cliques", "blocks(T) are exactly the maximal pairwise-tolerant sets", check_blocks_are_maximal_cliques));
  c.push_back(theorem<D::tolerances>("classes-star-blocks", "classes(T) = S(blocks(T))", check_classes_star_blocks));
  c.push_back(theorem<D::tolerances>("kernel-classes-blocks", "kernel via classes = kernel via blocks; P(T) = P(blocks) = P(classes)", check_kernel_routes));
  c.push_back(theorem<D::tolerances>("kernels-generate-blocks-classes", "B and T(x) are unions of kernels; union of kernels containing x within T(x)", check_kernel_unions));
  c.push_back(theorem<D::tolerances>("tolerance-block-roundtrip", "T_blocks(T) = T", check_block_roundtrip));
  c.push_back(theorem<D::tolerances>("tolerance-kernel-inclusion", "T_P(T)(x) within T(x)", check_kernel_tolerance_inclusion));
  c.push_back(theorem<D::tolerances>("kernel-condition-forward", "kernel condition implies T_P(T) = T", check_kernel_condition_forward));
  c.push_back(theorem<D::tolerances>("kernel-condition-backward", "T_P(T) = T implies kernel condition", check_kernel_condition_backward));

  c.push_back(theorem<D::coverings>("approx-first", "FH/FL = upper/lower and Cl/Int over T_beta = definitions", [](const Covering& b) { return check_operator_routes(K::first, b); }));
  c.push_back(theorem<D::coverings>("approx-second", "SH/SL = upper/lower and Cl/Int over T_P(beta) = definitions", [](const Covering& b) { return check_operator_routes(K::second, b); }));
  c.push_back(theorem<D::coverings>("approx-third", "TH/TL = upper/lower and Cl/Int over <= = definitions", [](const Covering& b) { return check_operator_routes(K::third, b); }));
  c.push_back(theorem<D::coverings>("approx-fourth", "XH/XL = upper/lower and Cl/Int over >= = definitions", [](const Covering& b) { return check_operator_routes(K::fourth, b); }));
  c.push_back(theorem<D::coverings>("approx-duality", "lower(X) = -upper(-X) for all four kinds", check_dualities));
  c.push_back(theorem<D::coverings>("approx-second-special-case", "SH/SL on beta = FH/FL on P(beta)", check_second_special_case));
  c.push_back(theorem<D::coverings>("approx-adjunction", "TH(X) within Y iff X within XL(Y)", check_adjunction));
  c.push_back(theorem<D::coverings>("approx-topological-idempotent", "TH and XH are idempotent", check_topological_idempotent));

  c.push_back(theorem<D::coverings>("first-soundness", "FH satisfies (1H)-(4H)", [](const Covering& b) { return check_soundness(K::first, b); }));
  c.push_back(theorem<D::coverings>("second-soundness", "SH satisfies (1H)-(5H)", [](const Covering& b) { return check_soundness(K::second, b); }));
  c.push_back(theorem<D::coverings>("third-soundness", "TH satisfies (H1)-(H4)", [](const Covering& b) { return check_soundness(K::third, b); }));
  c.push_back(theorem<D::coverings>("fourth-soundness", "XH satisfies (H1)-(H4)", [](const Covering& b) { return check_soundness(K::fourth, b); }));
  c.push_back(theorem<D::tables>("first-completeness", "every (1H)-(4H) table is FH of a reconstructed covering", [](const OperatorTable& h) { return check_completeness(K::first, h); }));
  c.push_back(theorem<D::tables>("second-completeness", "every (1H)-(5H) table is SH of a reconstructed covering", [](const OperatorTable& h) { return check_completeness(K::second, h); }));
  c.push_back(theorem<D::tables>("third-completeness", "every (H1)-(H4) table is TH of a reconstructed covering", [](const OperatorTable& h) { return check_completeness(K::third, h); }));
  c.push_back(theorem<D::tables>("fourth-completeness", "every (H1)-(H4) table is XH of a reconstructed covering", [](const OperatorTable& h) { return check_completeness(K::fourth, h); }));
  c.push_back(theorem<D::coverings>("fh-5h-kernel-condition", "(5H) holds for FH iff T_beta satisfies the kernel condition", check_kernel_axiom_vs_condition));

  c.push_back(theorem<D::relations>("closure-relation-soundness", "Cl_R satisfies C1-C4 and recovers the reflexive closure of R", check_relation_closure_sound));
  c.push_back(theorem<D::tables>("closure-relation-completeness", "every C1-C4 table is Cl_R of its recovered relation", check_closure_complete));
  c.push_back(theorem<D::relations>("closure-interior-duality", "Int_R(X) = -Cl_R(-X)", check_interior_duality));
  c.push_back(theorem<D::tables>("closure-interior-neighbourhood", "for Cech closures: C4 iff minimal neighbourhoods exist iff Int preserves meets", check_cl_int_neighbourhood));
  c.push_back(theorem<D::relations>("symmetric-minimal-neighbourhood", "R symmetric iff Cl_R(u) is the minimal neighbourhood of every u", check_symmetric_neighbourhood));
  c.push_back(theorem<D::relations>("closure-reflexive-form", "R reflexive implies Cl_R(X) = {x | R(x) meets X}", check_reflexive_form));
  c.push_back(theorem<D::relations>("preorder-alexandroff", "R reflexive: Cl_R satisfies C5 iff R is transitive", check_preorder_alexandroff));

  c.push_back(negative<D::tolerances>("kernel-union-strictness", "union of kernels containing x can be strictly smaller than T(x)", 4, kernel_union_strict));
  c.push_back(negative<D::coverings>("kernel-equality-converse", "down(x) = kernel(x) for all x does not force beta = blocks(T_beta)", 3, kernels_match_but_not_blocks));
  c.push_back(negative<D::tolerances>("kernel-tolerance-loss", "T_P(T) can differ from T", 4, kernel_system_loses_tolerance));
  c.push_back(negative<D::coverings>("fh-not-idempotent", "FH need not be idempotent", 3, [](const Covering& b) { return not_idempotent(K::first, b); }));
  c.push_back(negative<D::coverings>("sh-not-idempotent", "SH need not be idempotent", 3, [](const Covering& b) { return not_idempotent(K::second, b); }));
  c.push_back(negative<D::coverings>("complement-not-covering", "the complemented family need not be a covering", 1, complement_not_covering));
  c.push_back(negative<D::coverings>("third-fourth-coverings-differ", "third and fourth reconstructions of one table can differ", 2, third_fourth_differ));
  return c;
}

}  // namespace detail

/// The claim registry, in report order.
inline const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = detail::build_registry();
  return claims;
}

inline const Claim& find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.info.id == id) return c;
  }
  throw UnknownClaim("unknown claim id '" + std::string(id) + "'");
}

/// Largest n accepted by run_suite.
inline constexpr std::size_t kMaxSuiteSize = kMaxCoveringEnumeration;

struct SuiteOptions {
  /// Claim ids to run; empty runs all.
  std::vector<std::string> claims;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

inline ClaimResult run_claim(const Claim& claim, std::size_t n) {
  ClaimResult r = claim.run(n);
  r.id = claim.info.id;
  r.kind = claim.info.kind;
  r.domain = claim.info.domain;
  r.statement = claim.info.statement;
  r.n = n;
  r.expected_witness = claim.info.kind == ClaimKind::negative && n >= claim.info.min_witness_n;
  return r;
}

/// Runs the selected claims on universes of size n. Claims run concurrently;
/// results keep registry (or filter) order.
inline std::vector<ClaimResult> run_suite(std::size_t n, const SuiteOptions& options = {}) {
  if (n < 1 || n > kMaxSuiteSize) {
    throw OutOfRange("suite requires 1 <= n <= " + std::to_string(kMaxSuiteSize) + ", got " + std::to_string(n));
  }
  std::vector<const Claim*> selected;
  if (options.claims.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& id : options.claims) selected.push_back(&find_claim(id));
  }
  std::vector<ClaimResult> results(selected.size());
  std::size_t workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, selected.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        results[i] = run_claim(*selected[i], n);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

/// First witness of a negative claim in enumeration order, or nullopt.
inline std::optional<Json> find_counterexample(std::string_view property, std::size_t n) {
  const auto& claim = find_claim(property);
  if (claim.info.kind != ClaimKind::negative) {
    throw UnknownClaim("'" + std::string(property) + "' is not a negative claim");
  }
  return claim.run(n).witness;
}

inline std::size_t count_coverings(std::size_t n) {
  std::size_t count = 0;
  for_each_covering(n, [&](const Covering&) { ++count; });
  return count;
}

inline std::size_t count_tolerances(std::size_t n) {
  std::size_t count = 0;
  for_each_tolerance(n, [&](const ToleranceRelation&) { ++count; });
  return count;
}

inline bool all_passed(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.passed(); });
}

inline Json to_json(const ClaimResult& r) {
  Json j{{"id", r.id},
         {"kind", std::string(to_string(r.kind))},
         {"domain", std::string(to_string(r.domain))},
         {"statement", r.statement},
         {"n", r.n},
         {"instances", r.instances},
         {"applicable", r.applicable},
         {"passed", r.passed()}};
  if (r.kind == ClaimKind::theorem) {
    j["failure_count"] = r.failure_count;
    j["failures"] = r.failures;
  } else {
    j["expected_witness"] = r.expected_witness;
    j["witness"] = r.witness ? *r.witness : Json(nullptr);
  }
  return j;
}

inline std::string summary_line(std::size_t n, const std::vector<ClaimResult>& results) {
  std::string out = std::to_string(count_coverings(n)) + " coverings, " + std::to_string(count_tolerances(n)) + " tolerances, ";
  const auto failed = static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return !r.passed(); }));
  if (failed == 0) return out + "all claims pass";
  return out + std::to_string(failed) + " of " + std::to_string(results.size()) + " claims fail";
}

inline Json report_json(std::size_t n, const std::vector<ClaimResult>& results) {
  Json claims = Json::array();
  for (const auto& r : results) claims.push_back(to_json(r));
  return Json{{"n", n},
              {"coverings", count_coverings(n)},
              {"tolerances", count_tolerances(n)},
              {"claims", std::move(claims)},
              {"passed", all_passed(results)},
              {"summary", summary_line(n, results)}};
}

inline std::string report_text(std::size_t n, const std::vector<ClaimResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.passed() ? "PASS  " : "FAIL  ";
    out += r.id + "  [" + std::string(to_string(r.domain)) + ": " + std::to_string(r.instances);
    if (r.kind == ClaimKind::theorem && r.applicable != r.instances) out += ", applicable " + std::to_string(r.applicable);
    out += "]  " + r.statement + '\n';
    if (r.kind == ClaimKind::theorem) {
      for (const auto& f : r.failures) out += "      counterexample: " + f.dump() + '\n';
      if (r.failure_count > r.failures.size()) {
        out += "      ... " + std::to_string(r.failure_count - r.failures.size()) + " more\n";
      }
    } else if (r.witness) {
      out += "      witness: " + r.witness->dump() + (r.expected_witness ? "" : " (unexpected)") + '\n';
    } else {
      out += std::string("      no witness") + (r.expected_witness ? " (one was expected)" : "") + '\n';
    }
  }
  out += summary_line(n, results) + '\n';
  return out;
}

}  // namespace granular::verify
