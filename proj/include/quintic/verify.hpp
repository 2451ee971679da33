/**
 * @file verify.hpp
 * @brief Checks fixture rows against the classifier and, optionally, an external CAS.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quintic/cas_adapter.hpp"
#include "quintic/classification.hpp"
#include "quintic/fixtures.hpp"

namespace quintic {

enum class FixtureStatus { Pass, Anomaly, Fail };

inline const char* to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Pass: return "pass";
    case FixtureStatus::Anomaly: return "anomaly";
    case FixtureStatus::Fail: return "fail";
  }
  return "?";
}

struct FixtureOutcome {
  FixtureEntry entry;
  FixtureStatus status = FixtureStatus::Fail;
  RadicandVariant variant = RadicandVariant::NoMatch;
  std::string detail;
};

struct VerificationSummary {
  int pass = 0;
  int anomaly = 0;
  int fail = 0;
  std::vector<FixtureOutcome> outcomes;
};

struct VerifyOptions {
  std::optional<std::string> cas_command;
  std::chrono::milliseconds cas_timeout = kDefaultCasTimeout;
};

/// A row passes when it classifies into one of the three forms, or, for a listed anomaly, when it
/// classifies as NoMatch. With a CAS command, the CAS answer must also equal the row.
inline VerificationSummary verify_fixtures(const std::vector<FixtureEntry>& rows, const std::set<std::uint64_t>& anomalies,
                                           const VerifyOptions& opt = {}) {
  VerificationSummary sum;
  for (const auto& row : rows) {
    FixtureOutcome o{row, FixtureStatus::Fail, RadicandVariant::NoMatch, {}};
    try {
      o.variant = classify_radicand(row.n).variant;
      const bool listed = anomalies.count(row.n) != 0;
      if (listed) {
        o.status = o.variant == RadicandVariant::NoMatch ? FixtureStatus::Anomaly : FixtureStatus::Fail;
        if (o.status == FixtureStatus::Fail) o.detail = "listed as anomaly but classifies as " + std::string(to_string(o.variant));
      } else {
        o.status = o.variant != RadicandVariant::NoMatch ? FixtureStatus::Pass : FixtureStatus::Fail;
        if (o.status == FixtureStatus::Fail) o.detail = "matches none of the three forms";
      }
      if (opt.cas_command && o.status != FixtureStatus::Fail) {
        const auto got = cas_adapter_check(row.n, *opt.cas_command, opt.cas_timeout);
        if (!(got == row)) {
          o.status = FixtureStatus::Fail;
          o.detail = "CAS disagrees: " + to_json(got).dump();
        }
      }
    } catch (const Error& e) {
      o.status = FixtureStatus::Fail;
      o.detail = e.what();
    }
    switch (o.status) {
      case FixtureStatus::Pass: ++sum.pass; break;
      case FixtureStatus::Anomaly: ++sum.anomaly; break;
      case FixtureStatus::Fail: ++sum.fail; break;
    }
    sum.outcomes.push_back(std::move(o));
  }
  return sum;
}

inline VerificationSummary verify_fixtures(const std::string& fixtures_path, const std::string& anomalies_path,
                                           const VerifyOptions& opt = {}) {
  return verify_fixtures(load_fixtures(fixtures_path), load_anomalies(anomalies_path), opt);
}

}  // namespace quintic
