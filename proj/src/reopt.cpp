#include "makespan/reopt.hpp"

#include "makespan/errors.hpp"

#include <map>
#include <numeric>
#include <set>

namespace makespan {

namespace {

std::vector<MachineId> default_ids(std::size_t count, const std::vector<MachineId>& given) {
  if (!given.empty()) {
    if (given.size() != count) fail(ErrorKind::InvalidInput, "machine ID list length mismatch");
    return given;
  }
  std::vector<MachineId> ids(count);
  std::iota(ids.begin(), ids.end(), MachineId{0});
  return ids;
}

template <typename Id>
void require_unique(const std::vector<Id>& ids, const char* what) {
  std::set<Id> seen(ids.begin(), ids.end());
  if (seen.size() != ids.size()) fail(ErrorKind::InvalidInput, std::string("duplicate ") + what);
}

}  // namespace

PriorPlacement prior_placement(const ReoptInput& input) {
  const Instance& old_inst = input.old_instance;
  const Instance& new_inst = input.new_instance;
  if (input.job_ids_old.size() != old_inst.jobs()) fail(ErrorKind::InvalidInput, "job_ids_old length mismatch");
  if (input.job_ids_new.size() != new_inst.jobs()) fail(ErrorKind::InvalidInput, "job_ids_new length mismatch");
  require_unique(input.job_ids_old, "old job IDs");
  require_unique(input.job_ids_new, "new job IDs");
  const auto old_machines = default_ids(old_inst.machines(), input.machine_ids_old);
  const auto new_machines = default_ids(new_inst.machines(), input.machine_ids_new);
  require_unique(old_machines, "old machine IDs");
  require_unique(new_machines, "new machine IDs");
  check_assignment(old_inst, input.sigma0);

  std::map<MachineId, MachineIndex> new_index;
  for (MachineIndex i = 0; i < new_machines.size(); ++i) new_index[new_machines[i]] = i;
  std::map<JobId, MachineIndex> old_machine_of;
  for (JobIndex j = 0; j < old_inst.jobs(); ++j) old_machine_of[input.job_ids_old[j]] = input.sigma0[j];

  PriorPlacement prior;
  prior.machine.resize(new_inst.jobs());
  for (JobIndex j = 0; j < new_inst.jobs(); ++j) {
    auto found = old_machine_of.find(input.job_ids_new[j]);
    if (found == old_machine_of.end()) continue;
    auto survives = new_index.find(old_machines[found->second]);
    if (survives == new_index.end()) continue;
    if (new_inst.feasible(survives->second, j)) prior.machine[j] = survives->second;
  }
  return prior;
}

std::size_t transition_cost(const PriorPlacement& prior, const Assignment& a) {
  if (a.size() != prior.jobs()) fail(ErrorKind::InvalidInput, "assignment length mismatch");
  std::size_t cost = 0;
  for (JobIndex j = 0; j < a.size(); ++j) {
    if (!prior.machine[j] || *prior.machine[j] != a[j]) ++cost;
  }
  return cost;
}

std::size_t transition_cost(const ReoptInput& input, const Assignment& a) {
  return transition_cost(prior_placement(input), a);
}

ReoptInput identity_input(const Instance& inst, const Assignment& sigma0) {
  ReoptInput input;
  input.old_instance = inst;
  input.new_instance = inst;
  input.sigma0 = sigma0;
  input.job_ids_old.resize(inst.jobs());
  std::iota(input.job_ids_old.begin(), input.job_ids_old.end(), JobId{0});
  input.job_ids_new = input.job_ids_old;
  return input;
}

}  // namespace makespan
