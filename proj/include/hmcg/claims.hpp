#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hmcg/oracle.hpp"

namespace hmcg {

struct ClaimOutcome {
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct Claim {
  std::string id;
  std::string description;  // the identity or value being certified
  std::string guard_text;   // e.g. "g >= 4"; empty when every genus applies
  std::function<bool(int)> guard;
  std::function<ClaimOutcome(const Oracle&)> check;
};

enum class ClaimStatus { Pass, Fail, Skipped, Error };

std::string_view to_string(ClaimStatus s);

struct ClaimReport {
  std::string id;
  int genus = 0;
  ClaimStatus status = ClaimStatus::Error;
  std::string expected;
  std::string actual;
  double ms = 0.0;
  bool resource_cap = false;  // the error came from a size or overflow cap
};

struct RunSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t error = 0;
  std::size_t resource_cap = 0;
};

struct RunResult {
  int genus_min = 2;
  int genus_max = 2;
  std::vector<ClaimReport> reports;  // sorted by (id, genus)
  RunSummary summary;
};

struct RunOptions {
  int genus_min = 2;
  int genus_max = 5;
  std::vector<std::string> claims;  // empty selects every claim
  unsigned jobs = 1;
  OracleOptions oracle;
};

// Every registered claim, in a fixed order.
const std::vector<Claim>& registry();
const Claim* find_claim(std::string_view id);

// Runs one claim against one oracle; never throws.
ClaimReport check_claim(const Claim& claim, const Oracle& oracle);

// Throws Error on an empty or sub-2 genus range or an unknown claim id.
RunResult run(const RunOptions& options);

// {"range":[lo,hi],"reports":[...],"summary":{...}}
std::string to_json(const RunResult& result);
std::string to_text(const RunResult& result);

}  // namespace hmcg
