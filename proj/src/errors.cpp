#include "makespan/errors.hpp"

namespace makespan {

std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::InfeasiblePairAssigned: return "InfeasiblePairAssigned";
    case ErrorKind::NumericOverflow: return "NumericOverflow";
    case ErrorKind::MalformedFraction: return "MalformedFraction";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::RelaxedPackingFailed: return "RelaxedPackingFailed";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::ParameterBudgetExceeded: return "ParameterBudgetExceeded";
    case ErrorKind::ConfigurationBudgetExceeded: return "ConfigurationBudgetExceeded";
    case ErrorKind::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

bool is_budget(ErrorKind kind) {
  return kind == ErrorKind::ParameterBudgetExceeded ||
         kind == ErrorKind::ConfigurationBudgetExceeded ||
         kind == ErrorKind::StateBudgetExceeded || kind == ErrorKind::BudgetExceeded;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace makespan
