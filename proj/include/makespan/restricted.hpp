#pragma once

#include "makespan/instance.hpp"

#include <functional>
#include <vector>

namespace makespan {

enum class LoadClass { under, normal, over };

// over: load >= p_max + delta + 1; under: load <= delta.
struct MachinePartition {
  Time delta = 0;
  Time p_max = 0;
  std::vector<LoadClass> cls;

  LoadClass classify(Time load) const;
  bool any_over() const;
};

MachinePartition partition_machines(const std::vector<Time>& load, Time p_max, Time delta);

// Arcs machine -> job for the current assignment, job -> machine for every other feasible machine.
class PushGraph {
 public:
  PushGraph(const Instance& inst, const Assignment& a);

  const std::vector<JobIndex>& jobs_on(MachineIndex i) const { return jobs_on_[i]; }
  std::vector<MachineIndex> targets(JobIndex j) const;
  MachineIndex owner(JobIndex j) const { return owner_[j]; }
  void move(JobIndex j, MachineIndex to);
  bool consistent_with(const Assignment& a) const;

 private:
  const Instance* inst_;
  std::vector<MachineIndex> owner_;
  std::vector<std::vector<JobIndex>> jobs_on_;
};

struct PushEvent {
  std::vector<MachineIndex> machines;  // source first, destination last
  std::vector<JobIndex> jobs;          // jobs[k] moves machines[k] -> machines[k+1]
  std::vector<Time> loads_before;
  std::vector<Time> loads_after;
};

struct UbfResult {
  Assignment assignment;
  std::size_t pushes = 0;
};

Assignment initial_feasible(const Instance& inst);

UbfResult ubf(const Instance& inst, const Assignment& start, Time delta,
              const std::function<void(const PushEvent&)>& observer = {});

struct RestrictedRun {
  Rational phi;
  Rational l_opt;
  Time delta = 0;
  Time p_max = 0;
  std::size_t pushes = 0;
  Assignment result;
};

RestrictedRun schedule_restricted_traced(const Instance& inst);
Assignment schedule_restricted(const Instance& inst);

}  // namespace makespan
