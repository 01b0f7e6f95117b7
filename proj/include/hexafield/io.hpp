#pragma once

// JSON and CSV serialization. Pasture JSON is canonical: the nullset is the
// sorted list of canonical hexagon representatives, elements are residue
// vectors. Parsing accepts any member pair of a hexagon and reports every
// malformed input as a DomainError.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hexafield/errors.hpp"
#include "hexafield/galois.hpp"
#include "hexafield/group.hpp"
#include "hexafield/lottery.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield::io {

using json = nlohmann::ordered_json;

inline json element_to_json(const AbelianGroup& g, Elem e) {
  json arr = json::array();
  for (int r : g.element(e).residues) arr.push_back(r);
  return arr;
}

inline Elem element_from_json(const AbelianGroup& g, const json& j) {
  if (!j.is_array()) throw DomainError("group element must be an array of residues");
  if (j.size() != g.rank()) {
    throw DomainError("element has " + std::to_string(j.size()) + " residues, group " + g.literal() + " needs " +
                      std::to_string(g.rank()));
  }
  GroupElement x;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw DomainError("residues must be integers");
    const auto r = j[i].get<std::int64_t>();
    if (r < 0 || r >= g.invariant_factors()[i]) throw DomainError("residue out of range for " + g.literal());
    x.residues.push_back(static_cast<int>(r));
  }
  return g.index(x);
}

/// "3", "1,2" or "[1,2]"; a bare integer is allowed for cyclic groups.
inline Elem parse_element(const AbelianGroup& g, std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw DomainError("unbalanced element literal '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  json arr = json::array();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (tok.find_first_not_of(' ', used) != std::string::npos) throw DomainError("");
      arr.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad element literal '" + std::string(text) + "'");
    }
  }
  return element_from_json(g, arr);
}

inline json pair_to_json(const AbelianGroup& g, FundamentalPair p) {
  return json::array({element_to_json(g, p.u), element_to_json(g, p.v)});
}

inline json pasture_to_json(const Pasture& p) {
  json j;
  j["group"] = p.group().literal();
  j["epsilon"] = element_to_json(p.group(), p.unit());
  json ns = json::array();
  for (const auto& pr : p.nullset_pairs()) ns.push_back(pair_to_json(p.group(), pr));
  j["nullset"] = std::move(ns);
  return j;
}

inline Pasture pasture_from_json(const json& j, const Caps& caps = {}) {
  if (!j.is_object()) throw DomainError("pasture must be a JSON object");
  for (const char* key : {"group", "epsilon", "nullset"}) {
    if (!j.contains(key)) throw DomainError(std::string("pasture is missing \"") + key + "\"");
  }
  if (!j["group"].is_string()) throw DomainError("\"group\" must be a string such as \"Z2xZ4\"");
  const auto g = AbelianGroup::parse(j["group"].get<std::string>());
  require_cap(g.order(), caps.table_order, "pasture: group order");
  const Elem unit = element_from_json(g, j["epsilon"]);
  if (g.mul(unit, unit) != g.identity()) throw DomainError("epsilon must satisfy e^2 = 1");
  if (!j["nullset"].is_array()) throw DomainError("\"nullset\" must be an array of pairs");
  std::vector<FundamentalPair> pairs;
  for (const auto& pr : j["nullset"]) {
    if (!pr.is_array() || pr.size() != 2) throw DomainError("nullset entries must be [u, v] pairs");
    pairs.push_back({element_from_json(g, pr[0]), element_from_json(g, pr[1])});
  }
  return Pasture::from_pairs(g, unit, pairs, caps);
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

inline Pasture pasture_from_text(std::string_view text, const Caps& caps = {}) {
  return pasture_from_json(parse_json_text(text), caps);
}

inline std::string dump(const json& j) { return j.dump(); }

inline json estimate_to_json(const Estimate& e) {
  json j;
  j["event"] = e.event;
  j["successes"] = e.successes;
  j["samples"] = e.samples;
  j["p_hat"] = e.p_hat;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  return j;
}

inline json verdict_to_json(const QuotientVerdict& v) {
  json j;
  j["status"] = std::string(status_name(v.status));
  j["q"] = v.q ? json(*v.q) : json(nullptr);
  j["index"] = v.index ? json(*v.index) : json(nullptr);
  j["searched_bound"] = v.searched_bound;
  return j;
}

inline json census_to_json(const Census& c) {
  json j;
  j["group"] = c.group.literal();
  j["epsilon"] = element_to_json(c.group, c.unit);
  j["total_pastures"] = c.total_pastures;
  j["hyperfields"] = c.hyperfields;
  j["fields"] = c.fields;
  j["star_hyperfields"] = c.star_hyperfields;
  j["iso_classes"] = c.iso_classes;
  j["rigid_count"] = c.rigid_count;
  j["oracle_checked"] = c.oracle_checked;
  return j;
}

// CSV -------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline constexpr std::string_view kCensusHeader =
    "group,epsilon,nullset,is_hyperfield,is_field,is_4full,is_00,automorphisms";

/// One census row. The 4-full and 0/0 columns are left empty when the group
/// is beyond the oracle cap.
inline std::string census_row(const Pasture& p, const Caps& caps = {}) {
  const bool hyper = is_hyperfield_fast(p);
  const bool small = p.order() <= caps.oracle_order;
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  std::string row = csv_field(p.group().literal());
  row += ',' + csv_field(element_to_json(p.group(), p.unit()).dump());
  row += ',' + csv_field(pasture_to_json(p)["nullset"].dump());
  row += ',' + b(hyper);
  row += ',' + b(hyper && is_field(p));
  row += ',' + (hyper && small ? b(is_4full(p, caps)) : std::string());
  row += ',' + (hyper && small ? b(is_zero_over_zero(p, caps)) : std::string());
  row += ',' + std::to_string(pasture_automorphisms(p, caps).size());
  return row;
}

}  // namespace hexafield::io
