#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinet {

enum class ErrorKind {
  SelfLoopInput,
  EmptyInput,
  EndpointMismatch,
  BudgetExceeded,
  CycleDetected,
  NotStronglyConnected,
  NotCrossEdges,
  MissingEdgeMatrix,
  Divergence,
  GraphSamplingFailed,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; callers
// that need to branch (the CLI's exit codes, tests) switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pinet
