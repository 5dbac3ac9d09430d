#include "makespan/restricted.hpp"

#include "makespan/errors.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <queue>

namespace makespan {

namespace {

void require_restricted(const Instance& inst) {
  if (!inst.integral() || !inst.restricted_structure()) {
    fail(ErrorKind::KindMismatch, "restricted scheduler needs a restricted instance");
  }
}

}  // namespace

LoadClass MachinePartition::classify(Time load) const {
  if (load >= p_max + delta + 1) return LoadClass::over;
  if (load <= delta) return LoadClass::under;
  return LoadClass::normal;
}

bool MachinePartition::any_over() const {
  return std::find(cls.begin(), cls.end(), LoadClass::over) != cls.end();
}

MachinePartition partition_machines(const std::vector<Time>& load, Time p_max, Time delta) {
  MachinePartition part{delta, p_max, {}};
  for (Time l : load) part.cls.push_back(part.classify(l));
  return part;
}

PushGraph::PushGraph(const Instance& inst, const Assignment& a)
    : inst_(&inst), owner_(a.machine_of()), jobs_on_(inst.machines()) {
  for (JobIndex j = 0; j < a.size(); ++j) jobs_on_[a[j]].push_back(j);
}

std::vector<MachineIndex> PushGraph::targets(JobIndex j) const {
  std::vector<MachineIndex> out;
  for (MachineIndex i = 0; i < inst_->machines(); ++i) {
    if (i != owner_[j] && inst_->feasible(i, j)) out.push_back(i);
  }
  return out;
}

void PushGraph::move(JobIndex j, MachineIndex to) {
  auto& from = jobs_on_[owner_[j]];
  from.erase(std::find(from.begin(), from.end(), j));
  auto& dest = jobs_on_[to];
  dest.insert(std::lower_bound(dest.begin(), dest.end(), j), j);
  owner_[j] = to;
}

bool PushGraph::consistent_with(const Assignment& a) const {
  if (a.machine_of() != owner_) return false;
  for (MachineIndex i = 0; i < jobs_on_.size(); ++i) {
    for (JobIndex j : jobs_on_[i]) {
      if (owner_[j] != i) return false;
    }
  }
  return true;
}

Assignment initial_feasible(const Instance& inst) {
  std::vector<MachineIndex> machine_of(inst.jobs());
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    MachineIndex i = 0;
    while (!inst.feasible(i, j)) ++i;
    machine_of[j] = i;
  }
  return Assignment(std::move(machine_of));
}

UbfResult ubf(const Instance& inst, const Assignment& start, Time delta,
              const std::function<void(const PushEvent&)>& observer) {
  require_restricted(inst);
  check_assignment(inst, start);
  UbfResult result{start, 0};
  if (inst.jobs() == 0) return result;
  const std::vector<Time>& size = inst.base_times();
  const Time p_max = *std::max_element(size.begin(), size.end());
  std::vector<Time> load = integral_loads(inst, start);
  PushGraph graph(inst, start);

  struct Step {
    MachineIndex machine;
    JobIndex job;  // job that arrived at this state
    std::size_t parent;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  for (;;) {
    const MachinePartition part = partition_machines(load, p_max, delta);
    // States are (machine, size of the job travelling along the path), so that
    // every intermediate machine swaps two jobs of equal size.
    std::vector<Step> steps;
    std::set<std::pair<MachineIndex, Time>> seen;
    std::queue<std::size_t> queue;
    std::optional<std::size_t> found;

    auto expand = [&](MachineIndex from, std::size_t parent, std::optional<Time> travelling) {
      for (JobIndex j : graph.jobs_on(from)) {
        const Time s = size[j];
        if (s == 0 || (travelling && s != *travelling)) continue;
        for (MachineIndex to : graph.targets(j)) {
          if (part.cls[to] == LoadClass::over) continue;
          if (!seen.emplace(to, s).second) continue;
          steps.push_back({to, j, parent});
          if (part.cls[to] == LoadClass::under) {
            found = steps.size() - 1;
            return;
          }
          queue.push(steps.size() - 1);
        }
      }
    };

    for (MachineIndex i = 0; i < inst.machines() && !found; ++i) {
      if (part.cls[i] != LoadClass::over) continue;
      steps.push_back({i, 0, kRoot});
      expand(i, steps.size() - 1, std::nullopt);
    }
    while (!found && !queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop();
      expand(steps[at].machine, at, size[steps[at].job]);
    }
    if (!found) break;

    PushEvent event;
    for (std::size_t at = *found; at != kRoot; at = steps[at].parent) {
      event.machines.push_back(steps[at].machine);
      if (steps[at].parent != kRoot) event.jobs.push_back(steps[at].job);
    }
    std::reverse(event.machines.begin(), event.machines.end());
    std::reverse(event.jobs.begin(), event.jobs.end());
    for (MachineIndex i : event.machines) event.loads_before.push_back(load[i]);
    for (std::size_t k = 0; k < event.jobs.size(); ++k) {
      const JobIndex j = event.jobs[k];
      load[event.machines[k]] -= size[j];
      load[event.machines[k + 1]] += size[j];
      graph.move(j, event.machines[k + 1]);
      result.assignment.assign(j, event.machines[k + 1]);
    }
    for (MachineIndex i : event.machines) event.loads_after.push_back(load[i]);
    ++result.pushes;
    if (observer) observer(event);
  }
  return result;
}

RestrictedRun schedule_restricted_traced(const Instance& inst) {
  require_restricted(inst);
  RestrictedRun run;
  run.result = initial_feasible(inst);
  if (inst.jobs() == 0) return run;
  const std::vector<Time>& size = inst.base_times();
  const Time total = std::accumulate(size.begin(), size.end(), Time{0});
  std::size_t d = inst.machines();
  for (JobIndex j = 0; j < inst.jobs(); ++j) d = std::min(d, inst.feasible_count(j));
  run.phi = Rational(d) / Rational(inst.machines());
  run.l_opt = Rational(total) / Rational(inst.machines());
  run.delta = total / static_cast<Time>(d);
  run.p_max = *std::max_element(size.begin(), size.end());
  UbfResult pushed = ubf(inst, run.result, run.delta);
  run.pushes = pushed.pushes;
  run.result = std::move(pushed.assignment);
  return run;
}

Assignment schedule_restricted(const Instance& inst) { return schedule_restricted_traced(inst).result; }

}  // namespace makespan
