#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsw {

// One randomized check of an inequality or identity the library relies on.
struct CheckResult {
  std::string name;
  int trials = 0;
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

// Runs every check `trials` times from one seeded stream. Checks never throw
// on failure; they record what went wrong so the caller can print all of them.
std::vector<CheckResult> run_lemma_checks(std::uint64_t seed, int trials);

}  // namespace gsw
