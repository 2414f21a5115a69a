#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordiv::verify {

struct SuiteOptions {
  int trials = 200;  // random instances per generator configuration
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // largest violation or deviation seen
  std::string detail;
  // Extra measurements that do not count towards `passed`.
  std::vector<std::string> notes;
};

std::span<const std::string_view> suite_names();
bool is_suite(std::string_view name);

/// Unknown names raise kUsage.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace chordiv::verify
