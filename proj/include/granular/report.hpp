#pragma once

#include <string>

#include "granular/approx.hpp"
#include "granular/axiomatics.hpp"
#include "granular/format.hpp"
#include "granular/granulation.hpp"
#include "granular/io.hpp"
#include "granular/tolerance.hpp"

namespace granular::report {

using Json = nlohmann::json;

namespace detail {

inline std::string kernels_line(const ToleranceRelation& t) {
  const auto& u = *t.universe();
  std::string out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (x != 0) out += ' ';
    out += u.name(x) + "->" + format_subset(u, kernel(t, x));
  }
  return out;
}

inline Json kernels_json(const ToleranceRelation& t) {
  Json out = Json::object();
  for (std::size_t x = 0; x < t.universe_size(); ++x) out[t.universe()->name(x)] = io::to_json(*t.universe(), kernel(t, x));
  return out;
}

inline bool refinement_chain_holds(const Covering& beta) {
  return refines(point_closure_system(beta), beta) && refines(beta, star_system(beta));
}

}  // namespace detail

/// The granular worlds of a covering, one fact per line.
inline std::string show_text(const Covering& beta) {
  const auto& u = *beta.universe();
  const GranuleProfile profile(beta);
  const auto tolerance = induced_tolerance(beta);
  std::string out;
  out += "universe: " + format_subset(u, Subset::full(u.size())) + '\n';
  out += "covering: " + format_family(beta) + '\n';
  for (std::size_t x = 0; x < u.size(); ++x) {
    const auto& g = profile.at(x);
    out += "element " + u.name(x) + ": blocks " + format_family(g.blocks_containing) + " star " + format_subset(u, g.star) +
           " down " + format_subset(u, g.down) + " up " + format_subset(u, g.up) + '\n';
  }
  out += "star system: " + format_family(star_system(beta)) + '\n';
  out += "point closure system: " + format_family(point_closure_system(beta)) + '\n';
  out += "complement family: " + format_family(family_complement(beta)) + '\n';
  out += "core system: " + format_family(core_system(beta)) + '\n';
  out += "preorder (x <= y): " + format_pairs(specialization_preorder(beta)) + '\n';
  out += "induced tolerance: " + format_successors(tolerance.relation()) + '\n';
  out += "tolerance blocks: " + format_family(blocks(tolerance)) + '\n';
  out += "kernels: " + detail::kernels_line(tolerance) + '\n';
  out += std::string("refinement chain (point closures refine covering, covering refines stars): ") +
         (detail::refinement_chain_holds(beta) ? "holds" : "fails") + '\n';
  return out;
}

inline Json show_json(const Covering& beta) {
  const auto& u = *beta.universe();
  const GranuleProfile profile(beta);
  const auto tolerance = induced_tolerance(beta);
  Json elements = Json::array();
  for (std::size_t x = 0; x < u.size(); ++x) {
    const auto& g = profile.at(x);
    elements.push_back(Json{{"element", u.name(x)},
                            {"blocks", io::to_json(g.blocks_containing)["blocks"]},
                            {"star", io::to_json(u, g.star)},
                            {"down", io::to_json(u, g.down)},
                            {"up", io::to_json(u, g.up)}});
  }
  return Json{{"universe", u.names()},
              {"covering", io::to_json(beta)["blocks"]},
              {"elements", std::move(elements)},
              {"star_system", io::to_json(star_system(beta))["blocks"]},
              {"point_closure_system", io::to_json(point_closure_system(beta))["blocks"]},
              {"complement_family", io::to_json(family_complement(beta))["blocks"]},
              {"core_system", io::to_json(core_system(beta))["blocks"]},
              {"preorder", io::to_json(specialization_preorder(beta))["pairs"]},
              {"induced_tolerance", io::to_json(tolerance.relation())["pairs"]},
              {"tolerance_blocks", io::to_json(blocks(tolerance))["blocks"]},
              {"kernels", detail::kernels_json(tolerance)},
              {"refinement_chain", detail::refinement_chain_holds(beta)}};
}

inline std::string witness_text(const Universe& u, const AxiomWitness& w) {
  std::string out;
  for (const auto& s : w.subsets) out += ' ' + format_subset(u, s);
  for (auto e : w.elements) out += ' ' + u.name(e);
  return out;
}

inline std::string axioms_text(const Universe& u, const AxiomReport& rep) {
  std::string out;
  for (auto a : kAllAxioms) {
    out += '(' + std::string(to_string(a)) + ") " + (rep.holds_axiom(a) ? "true" : "false");
    if (const auto& w = rep.witness(a)) out += "  witness:" + witness_text(u, *w);
    out += '\n';
  }
  return out;
}

inline Json axioms_json(const Universe& u, const AxiomReport& rep) {
  Json out = Json::object();
  for (auto a : kAllAxioms) {
    Json entry{{"holds", rep.holds_axiom(a)}};
    if (const auto& w = rep.witness(a)) {
      Json subsets = Json::array();
      for (const auto& s : w->subsets) subsets.push_back(io::to_json(u, s));
      Json elements = Json::array();
      for (auto e : w->elements) elements.push_back(u.name(e));
      entry["witness"] = Json{{"subsets", std::move(subsets)}, {"elements", std::move(elements)}};
    }
    out[std::string(to_string(a))] = std::move(entry);
  }
  return out;
}

}  // namespace granular::report
