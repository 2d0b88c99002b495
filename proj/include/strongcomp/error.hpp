#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strongcomp {

enum class ErrorCode {
  out_of_range,
  parse_error,
  internal_invariant,
  invalid_partition,
  too_large,
  bad_spec,
  unknown_tag,
  unsupported,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::out_of_range: return "OUT_OF_RANGE";
  case ErrorCode::parse_error: return "PARSE_ERROR";
  case ErrorCode::internal_invariant: return "INTERNAL_INVARIANT";
  case ErrorCode::invalid_partition: return "INVALID_PARTITION";
  case ErrorCode::too_large: return "TOO_LARGE";
  case ErrorCode::bad_spec: return "BAD_SPEC";
  case ErrorCode::unknown_tag: return "UNKNOWN_TAG";
  case ErrorCode::unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

/// Exception type for every error raised by the library. `line()` is the
/// 1-based input line for parse failures and 0 otherwise.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string const& message, std::size_t line = 0)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
    , line_(line)
  {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  ErrorCode code_;
  std::size_t line_;
};

namespace detail {

[[noreturn]] inline void invariant_failure(char const* what)
{
  throw Error(ErrorCode::internal_invariant, what);
}

} // namespace detail

} // namespace strongcomp
