#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hbo {

// Outcome of a property sweep: how many identities were checked and which
// ones failed.  Failure messages are capped so a broken build stays readable.
struct LawReport {
  static constexpr std::size_t kMaxStoredFailures = 32;

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;

  bool ok() const { return failure_count == 0; }

  void pass() { ++checks; }

  void fail(const std::string& what) {
    ++checks;
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back(what);
  }

  void merge(const LawReport& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    for (const auto& f : other.failures) {
      if (failures.size() >= kMaxStoredFailures) break;
      failures.push_back(other.name.empty() ? f : other.name + ": " + f);
    }
  }
};

}  // namespace hbo
