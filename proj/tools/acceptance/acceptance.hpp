#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace trif::acceptance {

struct Options {
  std::filesystem::path fixtures;
  // Also run the trifolium implicit-route part of A8.
  bool stretch = true;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
  std::string stretch_detail;  // A8 only; never affects `passed`
};

// A fixture file is missing or unreadable.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& check_ids();  // A1 .. A10
bool is_check_id(const std::string& id);

// Throws FixtureError listing missing files. Returns one warning per file
// whose SHA-256 differs from SHA256SUMS.
std::vector<std::string> check_fixtures(const std::filesystem::path& dir);

// Runs one check. Domain and resource-cap errors become a failed result;
// FixtureError propagates.
CheckResult run_check(const std::string& id, const Options& options);

// "PASS A1  0.01s/1s  title: detail"
std::string format_line(const CheckResult& r);

}  // namespace trif::acceptance
