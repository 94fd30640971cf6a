#pragma once

#include <string>
#include <vector>

#include "ercd/generators.hpp"

namespace ercd {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Discrepancy };

/// "pass", "fail" or "recorded-discrepancy".
std::string statusName(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string paperRef;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // offending expression on failure, note on discrepancy
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  int passCount() const;
  int failCount() const;
  int discrepancyCount() const;
};

/// All concrete suite names ("all" is CLI sugar and not included).
std::vector<std::string> suiteNames();
bool isSuite(const std::string& name);

/// Runs one suite.  Checks are independent; jobs > 1 runs them on a small
/// thread pool.  The report content is identical for any job count.
VerificationReport runSuite(const std::string& name, int jobs = 1);

}  // namespace ercd
