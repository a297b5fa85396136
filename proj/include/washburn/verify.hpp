#pragma once

#include <functional>
#include <string>
#include <vector>

#include "washburn/io.hpp"

namespace washburn::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed value of the checked quantity
  double threshold = 0.0;  // bound the metric is compared against
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no runtime bound
  std::string detail;
};

struct VerifyOptions {
  std::string only;  // substring filter on suite names; empty runs everything
  bool parallel = true;
  // Injectable so the classification-boundary suite can be exercised with a wrong oracle.
  std::function<double(double)> critical_omega;
};

struct Suite {
  std::string name;
  std::string description;
  double time_limit = 0.0;
  std::function<CheckResult(const VerifyOptions&)> run;
};

/// Module invariant suites followed by acceptance criteria 1..11.
const std::vector<Suite>& suites();

/// Runs one suite, timing it and turning exceptions into failures.
CheckResult run_suite(const Suite& s, const VerifyOptions& opt);

/// Runs every suite whose name contains opt.only, in registry order.
std::vector<CheckResult> run(const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

io::JsonObject report(const std::vector<CheckResult>& results);

}  // namespace washburn::verify
