#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgc {

/// Hypothesis and input failures raised by the library. The CLI maps every
/// kind to exit status 2.
enum class ErrorKind {
  Parse,
  SingularSystem,
  DegreeMismatch,
  SamplingFailure,
  ZeroCurve,
  ChartDegenerate,
  PolarLocusCurve,
  ZeroPullback,
  NearSingularRadius,
  QuadratureFailure,
  MissingGrowthIndex,
  DegenerateCurve,
  CurvesIdentical,
  SharingViolated,
  InvalidInput,
};

std::string_view errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line/column position in the offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::Parse, message + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"),
        detail_(message),
        line_(line),
        column_(column) {}

  /// The message without kind prefix and position suffix.
  const std::string& detail() const noexcept { return detail_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

}  // namespace tgc
