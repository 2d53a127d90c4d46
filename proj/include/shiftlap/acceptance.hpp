#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "shiftlap/rng.hpp"

namespace shiftlap::acceptance {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

// Runs every criterion, printing one pass/fail line each as it completes.
std::vector<CriterionResult> run_all(std::ostream& log,
                                     std::uint64_t seed = kDefaultSeed);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace shiftlap::acceptance
