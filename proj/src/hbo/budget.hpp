#pragma once

#include <cstdint>
#include <string>

#include "hbo/error.hpp"

namespace hbo {

// Node-count guard for the search routines.  Exhausting the budget raises
// ErrorCode::budget_exceeded; results are never silently truncated.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      fail(ErrorCode::budget_exceeded,
           "search budget exceeded (limit " + std::to_string(limit_) + " nodes)");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace hbo
