#include "frontier/error.hpp"

namespace frontier {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyEffectiveSample: return "EmptyEffectiveSample";
    case ErrorKind::IntegerIndex: return "IntegerIndex";
    case ErrorKind::ZeroSpacing: return "ZeroSpacing";
    case ErrorKind::NonPositiveRatio: return "NonPositiveRatio";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::RangeTooNarrow: return "RangeTooNarrow";
    case ErrorKind::NonPositiveB: return "NonPositiveB";
    case ErrorKind::NonFiniteStart: return "NonFiniteStart";
    case ErrorKind::RedrawLimit: return "RedrawLimit";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::StudyFailed: return "StudyFailed";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::InvalidArgument || kind == ErrorKind::MalformedInput ||
         kind == ErrorKind::InvalidOrdering || kind == ErrorKind::NonPositiveInput;
}

FrontierError::FrontierError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw FrontierError(kind, message); }

}  // namespace frontier
