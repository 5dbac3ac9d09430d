#pragma once

#include "makespan/instance.hpp"
#include "makespan/lp.hpp"

#include <optional>
#include <vector>

namespace makespan {

struct BalanceView {
  Rational gamma;
  std::vector<MachineIndex> bad;   // load > T + gamma L
  std::vector<MachineIndex> good;  // load <= gamma L
  std::vector<std::vector<MachineIndex>> good_for;  // per job: good machines with time <= threshold
  std::vector<std::optional<JobIndex>> jmax;        // per machine, ties by job index
};

BalanceView balance_view(const Instance& inst, const Assignment& a, Time T, const Rational& L,
                         const Rational& gamma, Time threshold);

// gamma = 1 / phi_t for threshold index t of the feasibility profile.
BalanceView balance_view(const Instance& inst, const Assignment& a, Time T, const Rational& L,
                         const FeasibilityProfile& profile, std::size_t t);

// Bad-to-Good matching on jmax edges; moves each matched jmax.
// Empty when the matching does not saturate Bad.
std::optional<Assignment> transfer_largest_jobs(const Instance& inst, const Assignment& a, const BalanceView& view);

struct ThresholdCandidate {
  std::size_t threshold_index = 0;
  Assignment assignment;
  Rational makespan;
};

struct FullyFeasibleTrace {
  LpTLParams params;
  FeasibilityProfile profile;
  Assignment rounded;
  std::vector<ThresholdCandidate> candidates;
  std::optional<std::size_t> chosen;  // index into candidates; empty means fallback
  Assignment result;
};

FullyFeasibleTrace schedule_fully_feasible_traced(const Instance& inst);
Assignment schedule_fully_feasible(const Instance& inst);

}  // namespace makespan
