#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace makespan {

enum class ErrorKind {
  InvalidInput,
  KindMismatch,
  InfeasiblePairAssigned,
  NumericOverflow,
  MalformedFraction,
  NoPerfectMatching,
  Infeasible,
  InvalidDecomposition,
  RelaxedPackingFailed,
  NoPath,
  ParameterBudgetExceeded,
  ConfigurationBudgetExceeded,
  StateBudgetExceeded,
  BudgetExceeded,
};

std::string_view name(ErrorKind kind);

// Budget errors map to their own CLI exit code.
bool is_budget(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace makespan
