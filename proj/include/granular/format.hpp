#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "granular/family.hpp"
#include "granular/relation.hpp"

namespace granular {

/// "{a,b}" with names in universe order; the empty set renders as "{}".
inline std::string format_subset(const Universe& u, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s) {
    if (!first) out += ',';
    out += u.name(i);
    first = false;
  }
  out += '}';
  return out;
}

/// Blocks in lexicographic order of their element lists, e.g. {1,3} < {2,3} < {3}.
inline std::vector<Subset> display_order(const SubsetFamily& f) {
  std::vector<Subset> blocks(f.begin(), f.end());
  std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  return blocks;
}

inline std::string format_family(const SubsetFamily& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : display_order(f)) {
    if (!first) out += ',';
    out += format_subset(*f.universe(), b);
    first = false;
  }
  out += '}';
  return out;
}

/// "(x,y) (x,y) ..." in pair order.
inline std::string format_pairs(const Relation& r) {
  std::string out;
  for (auto [x, y] : r.pairs()) {
    if (!out.empty()) out += ' ';
    out += '(' + r.universe()->name(x) + ',' + r.universe()->name(y) + ')';
  }
  return out;
}

/// "x->{...} y->{...}" listing every successor set.
inline std::string format_successors(const Relation& r) {
  std::string out;
  const auto& u = *r.universe();
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (x != 0) out += ' ';
    out += u.name(x) + "->" + format_subset(u, r.successors(x));
  }
  return out;
}

}  // namespace granular
