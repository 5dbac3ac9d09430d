#pragma once

#include "makespan/instance.hpp"
#include "makespan/lp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace makespan {

inline constexpr std::size_t kDefaultLargePairCap = 20;

struct MilpParams {
  Rational epsilon;
  Time T = 0;
  std::vector<PairVariable> large_pairs;  // eps T < p_ij <= T, machine-major order
  std::size_t k_cap = kDefaultLargePairCap;

  std::size_t k() const noexcept { return large_pairs.size(); }
};

// Throws ParameterBudgetExceeded when k exceeds k_cap.
MilpParams milp_params(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap = kDefaultLargePairCap);

// Bit `k - 1 - idx` of a pattern fixes large_pairs[idx], so numeric order is lexicographic order.
bool pattern_bit(const MilpParams& params, std::uint64_t pattern, std::size_t idx);

// Fixed large pairs plus the residual LP solution; empty when pruned or infeasible.
std::optional<FractionalAssignment> solve_pattern(const Instance& inst, const MilpParams& params,
                                                  std::uint64_t pattern);

struct MilpOutcome {
  MilpParams params;
  std::uint64_t pattern = 0;
  FractionalAssignment x;
  Assignment assignment;
  Rational makespan;
  std::size_t feasible_patterns = 0;
};

// Best rounded pattern by (makespan, pattern). Throws Infeasible when none is feasible.
MilpOutcome solve_milp_scheme_traced(const Instance& inst, const Rational& eps, Time T,
                                     std::size_t k_cap = kDefaultLargePairCap);
Assignment solve_milp_scheme(const Instance& inst, const Rational& eps, Time T,
                             std::size_t k_cap = kDefaultLargePairCap);

// Stops at the first feasible pattern.
bool milp_feasible(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap = kDefaultLargePairCap);

Time minimal_T_for_scheme(const Instance& inst, const Rational& eps, std::size_t k_cap = kDefaultLargePairCap);

}  // namespace makespan
