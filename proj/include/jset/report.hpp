#pragma once

// Verification reports: a list of named claims, each verified or falsified,
// with witness data. Serialized as JSON.

#include <json.hpp>

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace jset {

enum class ClaimStatus { verified, falsified };

inline const char *to_string(ClaimStatus s) {
  return s == ClaimStatus::verified ? "verified" : "falsified";
}

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::verified;
  nlohmann::json witness;
  double millis = 0.0;
};

struct Report {
  std::string subject;
  std::vector<Claim> claims;
  nlohmann::json findings = nlohmann::json::object();
  std::vector<std::string> notes;

  bool all_verified() const {
    for (const auto &c : claims)
      if (c.status != ClaimStatus::verified)
        return false;
    return true;
  }

  const Claim *find(const std::string &name) const {
    for (const auto &c : claims)
      if (c.name == name)
        return &c;
    return nullptr;
  }

  void add(std::string name, bool ok, nlohmann::json witness = {}, double millis = 0.0) {
    claims.push_back(Claim{std::move(name), ok ? ClaimStatus::verified : ClaimStatus::falsified,
                           std::move(witness), millis});
  }

  /// Runs `check` (returning {ok, witness}) and records it with its timing.
  template <class F> void run(std::string name, F &&check) {
    const auto start = std::chrono::steady_clock::now();
    auto [ok, witness] = check();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    add(std::move(name), ok, std::move(witness), dt.count());
  }

  /// Timing is optional so that reports can be compared byte for byte.
  nlohmann::json to_json(bool include_timing = false) const {
    nlohmann::json j;
    j["subject"] = subject;
    j["all_verified"] = all_verified();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : claims) {
      nlohmann::json cj{{"claim", c.name}, {"status", to_string(c.status)}};
      if (!c.witness.is_null())
        cj["witness"] = c.witness;
      if (include_timing)
        cj["millis"] = c.millis;
      arr.push_back(std::move(cj));
    }
    j["claims"] = std::move(arr);
    if (!findings.empty())
      j["findings"] = findings;
    if (!notes.empty())
      j["notes"] = notes;
    return j;
  }
};

} // namespace jset
