#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ekit {

/// Machine-readable failure categories. The string forms are part of the
/// CLI JSON contract (error.code).
enum class ErrorCode {
  DegenerateInput,
  InvalidShape,
  DivisibilityViolation,
  BadExceptionalPoints,
  NoSuchProjection,
  InvalidRank,
  InconsistentMultiplicities,
  RecipeHypothesisFailed,
  Ex1PreconditionFailed,
  NotSameMultiset,
  TooLarge,
  GridTooCoarse,
  NotClosed,
  ParseError,
  InternalError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `failed_condition` carries the exact hypothesis
/// or inequality that failed, when the operation is a conjunction of named
/// conditions (recipe hypotheses, existence preconditions, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::string failed_condition)
      : std::runtime_error(message),
        code_(code),
        failed_condition_(std::move(failed_condition)) {}

  ErrorCode code() const { return code_; }
  const std::optional<std::string>& failed_condition() const {
    return failed_condition_;
  }

 private:
  ErrorCode code_;
  std::optional<std::string> failed_condition_;
};

}  // namespace ekit
