#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringnim {

enum class ErrorCode {
  InvalidWindow,
  InvalidRemoval,
  TerminalPosition,
  BudgetExceeded,
  WrongLength,
  NonpositivePile,
  UnknownClassifier,
  ParseError,
  InvalidPosition,
};

/// Stable kebab-case name used in CLI messages and HTTP error bodies.
std::string_view to_string(ErrorCode code) noexcept;

class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ringnim
