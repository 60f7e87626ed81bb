#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomised property suites shared by the unit tests and the acceptance run.
namespace hmcg::props {

struct SuiteResult {
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return trials > 0 && passed == trials; }
};

// Random inner automorphisms of F_rank are detected and the witness conjugates
// every basis letter to the right image.
SuiteResult inner_detection(int rank, int trials, std::uint32_t seed);

// Random words evaluate to matrices with M^T J M = s J, s the orientation.
SuiteResult form_parity(int genus, int trials, std::uint32_t seed);

// Random small matrices: U M V = D, U and V unimodular, d_i | d_{i+1}.
SuiteResult smith_random(int trials, std::uint32_t seed);

// Each single corrupted generator image makes some relation claim fail.
SuiteResult corruption_sensitivity(int genus);

}  // namespace hmcg::props
