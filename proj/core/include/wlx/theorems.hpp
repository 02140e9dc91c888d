// Executable reproduction drivers: each id runs one separation/containment/
// counting experiment end to end on generated inputs and reports claim-by-
// claim verdicts against the expected outcomes.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wlx {

struct Claim {
  std::string subject;   // what was evaluated, e.g. "N:1:d=2 node"
  std::string expected;  // expected outcome string
  std::string observed;  // observed outcome string
  std::string witness;   // separation witness or counterexample, may be empty
  bool pass = false;
};

struct TheoremReport {
  std::string id;
  std::string title;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<Claim> claims;
  long long runtime_ms = 0;
  bool passed = false;
};

struct TheoremOptions {
  std::map<std::string, long long> params;  // per-id overrides (l, k, n0, ...)
  std::uint64_t seed = 12345;
};

// thm1..thm14, appg1, appg2 in run order.
std::vector<std::string> theorem_ids();

TheoremReport reproduce_theorem(const std::string& id,
                                const TheoremOptions& opt = {});

}  // namespace wlx
