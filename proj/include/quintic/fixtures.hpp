/**
 * @file fixtures.hpp
 * @brief Table-1 style fixture rows and the list of radicands known not to fit any form.
 */
#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quintic/errors.hpp"

namespace quintic {

struct FixtureEntry {
  std::uint64_t n = 0;
  int h_k5 = 0;
  std::array<int, 2> group_type{0, 0};
  int rank_ambiguous = 0;

  friend bool operator==(const FixtureEntry&, const FixtureEntry&) = default;
};

inline nlohmann::json to_json(const FixtureEntry& e) {
  return {{"n", e.n}, {"h_k5", e.h_k5}, {"type", e.group_type}, {"rank_ambiguous", e.rank_ambiguous}};
}

/// Shape check shared by fixture files and CAS responses. `n` is optional in the latter.
inline FixtureEntry fixture_from_json(const nlohmann::json& j, bool require_n = true) {
  auto int_field = [&j](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw FixtureError(std::string("missing integer '") + key + "'");
    return j.at(key).get<long long>();
  };
  if (!j.is_object()) throw FixtureError("fixture entry must be an object");
  FixtureEntry e;
  if (require_n) {
    if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw FixtureError("missing unsigned 'n'");
    e.n = j.at("n").get<std::uint64_t>();
  }
  e.h_k5 = static_cast<int>(int_field("h_k5"));
  e.rank_ambiguous = static_cast<int>(int_field("rank_ambiguous"));
  const auto& t = j.contains("type") ? j.at("type") : nlohmann::json();
  if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
    throw FixtureError("'type' must be a pair of integers");
  e.group_type = {t[0].get<int>(), t[1].get<int>()};
  return e;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError(path + ": " + e.what());
  }
}

inline std::vector<FixtureEntry> parse_fixtures(const nlohmann::json& j) {
  if (!j.is_array()) throw FixtureError("fixture file must hold a JSON array");
  std::vector<FixtureEntry> out;
  for (const auto& row : j) out.push_back(fixture_from_json(row));
  return out;
}

inline std::vector<FixtureEntry> load_fixtures(const std::string& path) { return parse_fixtures(read_json_file(path)); }

/// Anomaly file: JSON array of radicands, or objects with an "n" field.
inline std::set<std::uint64_t> parse_anomalies(const nlohmann::json& j) {
  if (!j.is_array()) throw FixtureError("anomaly file must hold a JSON array");
  std::set<std::uint64_t> out;
  for (const auto& v : j) {
    const auto& n = v.is_object() && v.contains("n") ? v.at("n") : v;
    if (!n.is_number_unsigned()) throw FixtureError("anomaly entries must be unsigned integers");
    out.insert(n.get<std::uint64_t>());
  }
  return out;
}

inline std::set<std::uint64_t> load_anomalies(const std::string& path) { return parse_anomalies(read_json_file(path)); }

}  // namespace quintic
