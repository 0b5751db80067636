#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string tag;  // property family
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::size_t max_order = 8;
  std::size_t random_triples = 1000;
  std::uint64_t seed = 1;
  // Covering classes checked per group when the covering basis exceeds
  // exhaustive_limit; all of them otherwise.
  std::size_t exhaustive_limit = 4096;
  std::size_t sample = 1000;
};

// Fixed suite order.
const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteResult> run_all(const VerifyOptions& opt);

}  // namespace sbw
