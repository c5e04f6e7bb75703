#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polydual {

enum class ErrorCode {
  invalid_ring_spec,
  parse_error,
  not_a_unit,
  ring_mismatch,
  precondition,
  budget_exceeded,
};

/// Stable machine-readable name, used in CLI error JSON.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::parse_error,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace polydual
