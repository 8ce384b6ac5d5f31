#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frontier {

/// Failure categories raised by the library. The CLI maps input-side
/// kinds to exit code 2 and numerical kinds to exit code 3.
enum class ErrorKind {
  InvalidArgument,
  EmptyEffectiveSample,
  IntegerIndex,
  ZeroSpacing,
  NonPositiveRatio,
  ZeroDenominator,
  DegenerateSystem,
  InvalidOrdering,
  NonPositiveInput,
  RangeTooNarrow,
  NonPositiveB,
  NonFiniteStart,
  RedrawLimit,
  EmptyChain,
  StudyFailed,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds caused by bad user input rather than by the data.
bool is_input_error(ErrorKind kind) noexcept;

class FrontierError : public std::runtime_error {
 public:
  FrontierError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace frontier
