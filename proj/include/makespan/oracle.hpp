#pragma once

#include "makespan/graph_balancing.hpp"
#include "makespan/instance.hpp"
#include "makespan/reopt.hpp"

#include <cstdint>
#include <optional>

namespace makespan {

inline constexpr std::uint64_t kOracleStateCap = 20'000'000;

// Number of assignments m^n, saturated above the cap.
std::uint64_t assignment_space(std::size_t machines, std::size_t jobs, std::uint64_t cap = kOracleStateCap);
bool oracle_within_cap(const Instance& inst, std::uint64_t cap = kOracleStateCap);

struct OracleResult {
  Rational t_opt;
  Rational l_opt;  // smallest average load among makespan-optimal assignments
  Assignment witness;
};

OracleResult exact_makespan(const Instance& inst, std::uint64_t cap = kOracleStateCap);

struct ReoptOracleResult {
  std::size_t cost = 0;
  Rational c_star;
  Assignment witness;
};

// Minimum transition cost over assignments of the new instance with makespan
// at most ratio * C*; no ratio means any makespan.
ReoptOracleResult exact_reopt(const ReoptInput& input, const std::optional<Rational>& ratio,
                              std::uint64_t cap = kOracleStateCap);

struct OrientationOracleResult {
  Time makespan = 0;
  Orientation witness;
};

OrientationOracleResult exact_orientation(const GraphBalancingInstance& g, std::size_t max_edges = 24);

}  // namespace makespan
