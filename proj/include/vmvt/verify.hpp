#pragma once

// The invariant suite behind `vmvt verify-all`. Reports contain no timings, so a fixed
// seed gives byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vmvt {

enum class Profile { quick, full };

Profile parse_profile(const std::string& name);
std::string to_string(Profile p);

struct CheckResult {
  std::string module;
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  Profile profile = Profile::quick;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_ok() const;
  nlohmann::json to_json() const;
};

SuiteReport verify_all(Profile profile, std::uint64_t seed);

}  // namespace vmvt
