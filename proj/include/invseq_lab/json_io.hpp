#pragma once

// JSON encodings for the workbench types, via nlohmann::json ADL hooks.
//
// Inversion sequences serialize as plain integer arrays.  Paths serialize as
// {"steps": [...]}, where each step spells out its fields; a simple path uses
// the same encoding as the walk it wraps.  Series and count tables serialize
// as flat term lists with coefficients rendered as decimal strings, so that
// values outside the 64-bit range survive the round trip.

#include <json.hpp>

#include <string>
#include <vector>

#include "invseq_lab/bigint.hpp"
#include "invseq_lab/invseq.hpp"
#include "invseq_lab/lattice.hpp"
#include "invseq_lab/series.hpp"

namespace invseq_lab {

inline void to_json(nlohmann::json& j, const InversionSequence& e) {
  j = e.entries();
}

inline void from_json(const nlohmann::json& j, InversionSequence& e) {
  e = InversionSequence(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const FStep& s) {
  j = nlohmann::json{{"dx", s.dx}, {"dy", s.dy}, {"label", s.label}};
}

inline void from_json(const nlohmann::json& j, FStep& s) {
  j.at("dx").get_to(s.dx);
  j.at("dy").get_to(s.dy);
  j.at("label").get_to(s.label);
}

inline void to_json(nlohmann::json& j, const WStep& s) {
  j = nlohmann::json{{"dx", s.dx}, {"dy", s.dy}, {"weight", s.weight}};
}

inline void from_json(const nlohmann::json& j, WStep& s) {
  j.at("dx").get_to(s.dx);
  j.at("dy").get_to(s.dy);
  j.at("weight").get_to(s.weight);
}

inline void to_json(nlohmann::json& j, const LabeledFPath& p) {
  j = nlohmann::json{{"steps", p.steps}};
}

inline void from_json(const nlohmann::json& j, LabeledFPath& p) {
  j.at("steps").get_to(p.steps);
}

inline void to_json(nlohmann::json& j, const WeightedHWalk& w) {
  j = nlohmann::json{{"steps", w.steps}};
}

inline void from_json(const nlohmann::json& j, WeightedHWalk& w) {
  j.at("steps").get_to(w.steps);
}

inline void to_json(nlohmann::json& j, const SimpleHPath& p) {
  to_json(j, p.underlying);
}

inline void from_json(const nlohmann::json& j, SimpleHPath& p) {
  from_json(j, p.underlying);
}

// Terms appear in lexicographic (x, y, z) exponent order, matching the
// series' internal ordering.
inline void to_json(nlohmann::json& j, const TruncatedSeries& s) {
  j = nlohmann::json::array();
  for (const auto& [key, c] : s.coeffs()) {
    j.push_back(nlohmann::json{{"x", key[0]},
                               {"y", key[1]},
                               {"z", key[2]},
                               {"c", to_decimal(c)}});
  }
}

// Rows appear in (n, m, t) order; a -1 in a key position marks a bucket the
// producer left unresolved (for count tables, rank undefined) and such keys
// keep the -1 verbatim.
inline void to_json(nlohmann::json& j, const CountTable& table) {
  j = nlohmann::json::array();
  for (const auto& [key, c] : table.cells()) {
    const auto& [n, m, t] = key;
    j.push_back(nlohmann::json{
        {"n", n}, {"m", m}, {"t", t}, {"count", to_decimal(c)}});
  }
}

inline void from_json(const nlohmann::json& j, CountTable& table) {
  table = CountTable{};
  for (const auto& row : j) {
    table.add(row.at("n").get<int>(), row.at("m").get<int>(),
              row.at("t").get<int>(),
              Int(row.at("count").get<std::string>()));
  }
}

}  // namespace invseq_lab
