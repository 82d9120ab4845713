#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "granular/family.hpp"
#include "granular/format.hpp"
#include "granular/operator_table.hpp"
#include "granular/relation.hpp"

// File formats:
//   covering  {"universe": ["1","2","3"], "blocks": [["1","3"], ["2","3"], ["3"]]}
//   relation  {"universe": [...], "pairs": [["1","3"], ...]}
//   table     {"universe": [...], "map": [[["<input>", ...], ["<output>", ...]], ...]}
// A table file lists each of the 2^n inputs exactly once.

namespace granular::io {

using Json = nlohmann::json;

namespace detail {

inline const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

inline const Json& array_member(const Json& obj, const char* key) {
  const auto& v = member(obj, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return v;
}

inline std::string string_value(const Json& v) {
  if (!v.is_string()) throw ParseError("expected an element name string");
  return v.get<std::string>();
}

inline Subset subset_value(const Universe& u, const Json& v) {
  if (!v.is_array()) throw ParseError("expected an array of element names");
  auto s = Subset::empty(u.size());
  for (const auto& e : v) s = s.with(u.index_of(string_value(e)));
  return s;
}

}  // namespace detail

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline UniversePtr universe_from_json(const Json& doc) {
  std::vector<std::string> names;
  for (const auto& v : detail::array_member(doc, "universe")) names.push_back(detail::string_value(v));
  return Universe::make(std::move(names));
}

inline Json to_json(const Universe& u, const Subset& s) {
  Json arr = Json::array();
  for (auto i : s) arr.push_back(u.name(i));
  return arr;
}

inline Json to_json(const SubsetFamily& f) {
  Json blocks = Json::array();
  for (const auto& b : display_order(f)) blocks.push_back(to_json(*f.universe(), b));
  return Json{{"universe", f.universe()->names()}, {"blocks", std::move(blocks)}};
}

inline Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (auto [x, y] : r.pairs()) pairs.push_back(Json::array({r.universe()->name(x), r.universe()->name(y)}));
  return Json{{"universe", r.universe()->names()}, {"pairs", std::move(pairs)}};
}

inline Json to_json(const OperatorTable& t) {
  Json map = Json::array();
  const auto& u = *t.universe();
  for (std::size_t m = 0; m < t.rows().size(); ++m) {
    const Subset in(u.size(), static_cast<Mask>(m));
    map.push_back(Json::array({to_json(u, in), to_json(u, t.rows()[m])}));
  }
  return Json{{"universe", u.names()}, {"map", std::move(map)}};
}

inline SubsetFamily family_from_json(const Json& doc) {
  auto u = universe_from_json(doc);
  std::vector<Subset> blocks;
  for (const auto& b : detail::array_member(doc, "blocks")) blocks.push_back(detail::subset_value(*u, b));
  return SubsetFamily(u, std::move(blocks));
}

inline Covering covering_from_json(const Json& doc) { return Covering(family_from_json(doc)); }

inline Relation relation_from_json(const Json& doc) {
  auto u = universe_from_json(doc);
  std::vector<Relation::Pair> pairs;
  for (const auto& p : detail::array_member(doc, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("relation pairs must be two-element arrays");
    pairs.emplace_back(u->index_of(detail::string_value(p[0])), u->index_of(detail::string_value(p[1])));
  }
  return Relation::from_pairs(u, pairs);
}

inline OperatorTable table_from_json(const Json& doc) {
  auto u = universe_from_json(doc);
  if (u->size() > kMaxTableUniverseSize) {
    throw OutOfRange("operator tables support at most " + std::to_string(kMaxTableUniverseSize) + " elements");
  }
  const std::size_t rows = std::size_t{1} << u->size();
  std::vector<Subset> out(rows, Subset::empty(u->size()));
  std::vector<bool> seen(rows, false);
  for (const auto& entry : detail::array_member(doc, "map")) {
    if (!entry.is_array() || entry.size() != 2) throw ParseError("table entries must be [input, output] pairs");
    const auto in = detail::subset_value(*u, entry[0]);
    if (seen[in.bits()]) throw NonTotalTable("input listed more than once: " + entry[0].dump());
    seen[in.bits()] = true;
    out[in.bits()] = detail::subset_value(*u, entry[1]);
  }
  for (std::size_t m = 0; m < rows; ++m) {
    if (!seen[m]) {
      throw NonTotalTable("table has no row for input " +
                          to_json(*u, Subset(u->size(), static_cast<Mask>(m))).dump());
    }
  }
  return OperatorTable(u, std::move(out));
}

/// Comma-separated element names; the empty string is the empty set.
inline Subset parse_subset_list(const Universe& u, std::string_view text) {
  auto s = Subset::empty(u.size());
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  if (trim(text).empty()) return s;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    s = s.with(u.index_of(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

}  // namespace granular::io
