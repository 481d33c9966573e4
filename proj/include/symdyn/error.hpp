#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdyn {

enum class ErrorKind {
  invalid_argument,
  invalid_position,
  replacement_broken,
  resource_limit,
  not_found,
  empty_subshift,
  reducible_presentation,
  not_sparse,
  position_not_occurrence,
  parse_error,
  schema_error,
  semantic_error,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it onto structured output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symdyn
