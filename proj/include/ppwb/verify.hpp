#pragma once

#include <string>
#include <vector>

namespace ppwb {

struct Check {
  std::string id;
  std::string status;  // "pass", "fail" or "info"
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;  // sorted by id
  bool pass = true;
  // Extra JSON fragments (one per conjecture table set), gogmagog only.
  std::vector<std::string> tables;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);          // accepts "all"

/// Throws InvalidArgument for an unknown suite.
VerifyReport run_suite(const std::string& name);

/// Checks backing one numbered acceptance criterion (1..11).
std::vector<Check> criterion_checks(int criterion);

std::string report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

}  // namespace ppwb
