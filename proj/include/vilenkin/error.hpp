#pragma once

#include <stdexcept>
#include <string>

namespace vilenkin {

enum class ErrorCode {
  invalid_radix,
  depth_too_large,
  out_of_range,
  system_mismatch,
  invalid_argument,
  depth_insufficient,
  parse_error,
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

}  // namespace vilenkin
