#pragma once

#include <stdexcept>
#include <string>

namespace hbo {

enum class ErrorCode {
  invalid_argument = 1,
  budget_exceeded = 2,
  parse_error = 3,
  internal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hbo
