#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcx {

enum class ErrorCode {
  VertexOutOfRange,
  SelfLoop,
  CapExceeded,
  ParseError,
  CountMismatch,
  UnknownNodeReference,
  TooLargeForMatrixExport,
  InvalidParameters,
  ComplementTooDense,
  EdgeBudgetExceeded,
  EmptyGraph,
  InvalidPermutation,
  TooLargeForLayout,
  MissingCycle,
  UnknownJob,
  GraphNotFound,
  TooManyJobs,
  Cancelled,
};

// Coarse grouping used for CLI exit codes and HTTP statuses.
enum class ErrorCategory { Parse, Cap, Runtime };

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
    case ErrorCode::TooLargeForMatrixExport: return "TooLargeForMatrixExport";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ComplementTooDense: return "ComplementTooDense";
    case ErrorCode::EdgeBudgetExceeded: return "EdgeBudgetExceeded";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::TooLargeForLayout: return "TooLargeForLayout";
    case ErrorCode::MissingCycle: return "MissingCycle";
    case ErrorCode::UnknownJob: return "UnknownJob";
    case ErrorCode::GraphNotFound: return "GraphNotFound";
    case ErrorCode::TooManyJobs: return "TooManyJobs";
    case ErrorCode::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

constexpr ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SelfLoop:
    case ErrorCode::CountMismatch:
    case ErrorCode::UnknownNodeReference:
      return ErrorCategory::Parse;
    case ErrorCode::CapExceeded:
    case ErrorCode::TooLargeForMatrixExport:
    case ErrorCode::ComplementTooDense:
    case ErrorCode::EdgeBudgetExceeded:
    case ErrorCode::TooLargeForLayout:
      return ErrorCategory::Cap;
    default:
      return ErrorCategory::Runtime;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  // Parse errors carry the 1-based input line they refer to.
  Error(ErrorCode code, std::size_t line, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + " at line " + std::to_string(line) +
                           ": " + message),
        code_(code),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace gcx
