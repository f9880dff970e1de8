#pragma once

#include <stdexcept>
#include <string>

namespace blink {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kCapExceeded,
  kBudgetExceeded,
  kUnreachable,
  kDivergent,
  kDegenerate,
  kNumeric,
  kRange,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blink
