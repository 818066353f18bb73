#pragma once

// Text descriptors for unit groups and connection sets, as accepted on the
// command line and in catalog files.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "../graph.hpp"
#include "../ring.hpp"
#include "../supercharacter.hpp"
#include "../unit_group.hpp"

namespace supercayley::app {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// Split on ';' and on ',' outside parentheses.
inline std::vector<std::string> split_items(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    const auto t = trim(cur);
    if (!t.empty()) out.emplace_back(t);
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (c == ';' || (c == ',' && depth == 0)) flush();
    else cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  flush();
  return out;
}

inline std::vector<Elem> parse_element_list(const RingSpec& R, std::string_view text) {
  std::vector<Elem> out;
  for (const auto& item : split_items(text)) out.push_back(R.parse_element(item));
  return out;
}

/// full | squares | pth-powers:<p> | involutions | jacobi | gen:<elements>
inline UnitSubgroupSpec parse_unit_group(const RingSpec& R, std::string_view text) {
  const auto t = trim(text);
  if (t == "full") return UnitSubgroupSpec::full();
  if (t == "squares") return UnitSubgroupSpec::squares();
  if (t == "involutions") return UnitSubgroupSpec::involutions();
  if (t == "jacobi") return UnitSubgroupSpec::jacobi();
  if (starts_with(t, "pth-powers:")) {
    const std::string num(trim(t.substr(11)));
    std::size_t used = 0;
    long long p = 0;
    try {
      p = std::stoll(num, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + std::string(t) + "'");
    }
    if (used != num.size() || p < 1) throw ParseError("bad exponent in '" + std::string(t) + "'");
    return UnitSubgroupSpec::pth_powers(p);
  }
  if (starts_with(t, "gen:")) return UnitSubgroupSpec::generated(parse_element_list(R, t.substr(4)));
  throw ParseError("unknown unit group '" + std::string(t) + "'");
}

/// U | all-units | all-nonzero | empty | classes:<reps> | elements:<list> |
/// complement:<descriptor> | <bare element list>
inline ConnectionSet parse_connection_set(const SuperTheory& t, std::string_view text) {
  const auto s = trim(text);
  const RingSpec& R = t.ring();
  if (s == "U" || s == "all-units") return unit_connection_set(t);
  if (s == "all-nonzero") return all_nonzero(t);
  if (s == "empty" || s == "none") return ConnectionSet(t, {});
  if (starts_with(s, "complement:")) return complement(parse_connection_set(t, s.substr(11)));
  if (starts_with(s, "classes:")) {
    std::vector<std::size_t> idx;
    for (Elem x : parse_element_list(R, s.substr(8))) {
      if (x == 0) throw ParseError("class representative 0 is not allowed in a connection set");
      idx.push_back(t.class_index(x));
    }
    return ConnectionSet(t, std::move(idx));
  }
  const auto body = starts_with(s, "elements:") ? s.substr(9) : s;
  std::vector<Elem> raw = parse_element_list(R, body);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Classification c = classify_set(t, raw);
  if (!c.accepted()) {
    std::string msg = "set is not a union of U-orbits; partially met classes:";
    for (auto i : c.partial_classes) msg += " " + R.render_item(t.representative(i));
    throw DomainError(msg);
  }
  return *c.set;
}

}  // namespace supercayley::app
