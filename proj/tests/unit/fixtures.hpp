#pragma once

#include <string>
#include <vector>

#include "granular/granular.hpp"

namespace fixtures {

using namespace granular;

inline const UniversePtr& u3() {
  static const UniversePtr u = Universe::numbered(3);
  return u;
}

inline const UniversePtr& u4() {
  static const UniversePtr u = Universe::numbered(4);
  return u;
}

/// "1,3" -> {1,3}; "" -> {}.
inline Subset set(const UniversePtr& u, const std::string& names) { return io::parse_subset_list(*u, names); }

inline SubsetFamily family(const UniversePtr& u, const std::vector<std::string>& blocks) {
  std::vector<Subset> out;
  for (const auto& b : blocks) out.push_back(set(u, b));
  return SubsetFamily(u, out);
}

inline Covering covering(const UniversePtr& u, const std::vector<std::string>& blocks) {
  return Covering(family(u, blocks));
}

inline Covering beta0() { return covering(u3(), {"1,3", "2,3", "3"}); }
inline Covering partition3() { return covering(u3(), {"1", "2", "3"}); }
inline Covering cycle4() { return covering(u4(), {"1,2", "2,3", "3,4", "4,1"}); }

inline ToleranceRelation cycle_tolerance() { return induced_tolerance(cycle4()); }

}  // namespace fixtures
