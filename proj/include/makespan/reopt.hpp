#pragma once

#include "makespan/instance.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace makespan {

using JobId = std::int64_t;
using MachineId = std::int64_t;

// Old and new instance with stable job and machine IDs. A job costs one unit
// when it is new or when it leaves the machine it had under sigma0.
struct ReoptInput {
  Instance old_instance;
  Instance new_instance;
  Assignment sigma0;  // over the old instance's jobs
  std::vector<JobId> job_ids_old;
  std::vector<JobId> job_ids_new;
  std::vector<MachineId> machine_ids_old;  // empty means 0..m0-1
  std::vector<MachineId> machine_ids_new;  // empty means 0..m-1
  std::optional<Rational> speed_ratio_bound;

  friend bool operator==(const ReoptInput&, const ReoptInput&) = default;
};

// Per new job, the new-instance machine it occupied under sigma0, if any.
struct PriorPlacement {
  std::vector<std::optional<MachineIndex>> machine;

  std::size_t jobs() const noexcept { return machine.size(); }
};

// Validates IDs and sigma0 and maps old placements into the new instance.
PriorPlacement prior_placement(const ReoptInput& input);

std::size_t transition_cost(const PriorPlacement& prior, const Assignment& a);
std::size_t transition_cost(const ReoptInput& input, const Assignment& a);

// New instance equal to the old one, job IDs 0..n-1.
ReoptInput identity_input(const Instance& inst, const Assignment& sigma0);

}  // namespace makespan
