#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uct {

enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  ZeroInverse,
  DimensionMismatch,
  RingTooLarge,
  GraphTooLarge,
  GraphTooLargeForOracle,
  DisconnectedGraph,
  WrongField,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the errors that mean "instance exceeds a configured size limit".
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::FieldTooLarge || kind_ == ErrorKind::RingTooLarge ||
           kind_ == ErrorKind::GraphTooLarge || kind_ == ErrorKind::GraphTooLargeForOracle;
  }

 private:
  ErrorKind kind_;
};

}  // namespace uct
