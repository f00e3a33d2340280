#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcnoma::validation {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  long long trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::ostream* log = nullptr;  // per-check lines
};

constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id, const Options& opt = {});
// Empty `which` runs all criteria in order.
std::vector<CriterionResult> run_all(const Options& opt = {}, const std::vector<int>& which = {});

}  // namespace bcnoma::validation
