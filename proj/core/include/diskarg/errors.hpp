#pragma once

#include <stdexcept>
#include <string>

namespace diskarg {

enum class ErrorKind {
  invalid_argument,
  at_zero,
  degenerate_denominator,
  tail_bound_exceeded,
  nonconvergent_quadrature,
  real_zero_in_base,
  parse_error,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that sweeps can count failures by category instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace diskarg
