#include "uct/error.hpp"

namespace uct {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingTooLarge: return "RingTooLarge";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::GraphTooLargeForOracle: return "GraphTooLargeForOracle";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::WrongField: return "WrongField";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace uct
