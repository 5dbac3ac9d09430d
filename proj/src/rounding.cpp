#include "makespan/rounding.hpp"

#include "makespan/errors.hpp"
#include "makespan/matching.hpp"

#include <algorithm>

namespace makespan {

std::size_t SubMachineGraph::bins_on(MachineIndex i) const {
  return static_cast<std::size_t>(
      std::count_if(bins.begin(), bins.end(), [i](const SubMachineBin& b) { return b.machine == i; }));
}

SubMachineGraph build_submachine_graph(const Instance& inst, const FractionalAssignment& x) {
  if (x.machines() != inst.machines() || x.jobs() != inst.jobs()) {
    fail(ErrorKind::MalformedFraction, "fractional assignment shape does not match the instance");
  }
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    Rational total = 0;
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      const Rational& f = x.at(i, j);
      if (f < 0) fail(ErrorKind::MalformedFraction, "negative fraction");
      if (f > 0 && !inst.feasible(i, j)) fail(ErrorKind::MalformedFraction, "fraction on an infeasible pair");
      total += f;
    }
    if (total != 1) fail(ErrorKind::MalformedFraction, "fractions of job " + std::to_string(j) + " sum to " + to_string(total));
  }

  SubMachineGraph graph;
  graph.bins_of_job.resize(inst.jobs());
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    std::vector<JobIndex> order;
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      if (x.at(i, j) > 0) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](JobIndex a, JobIndex b) { return inst.time(i, a) > inst.time(i, b); });
    Rational fill = 1;  // forces a fresh bin for the first piece
    std::size_t slot = 0;
    for (JobIndex j : order) {
      Rational rest = x.at(i, j);
      while (rest > 0) {
        if (fill == 1) {
          graph.bins.push_back({i, slot++, {}});
          fill = 0;
        }
        const Rational piece = std::min(rest, Rational(1) - fill);
        graph.bins.back().pieces.push_back({j, piece});
        graph.bins_of_job[j].push_back(graph.bins.size() - 1);
        fill += piece;
        rest -= piece;
      }
    }
  }
  return graph;
}

Assignment round_fractional(const Instance& inst, const FractionalAssignment& x) {
  const SubMachineGraph graph = build_submachine_graph(inst, x);
  CostMatrix cost(inst.jobs(), std::vector<std::optional<std::int64_t>>(graph.bins.size()));
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    for (std::size_t b : graph.bins_of_job[j]) cost[j][b] = inst.time(graph.bins[b].machine, j);
  }
  const AssignmentResult matching = min_cost_assignment(cost, graph.bins.size());
  std::vector<MachineIndex> machine_of(inst.jobs());
  for (JobIndex j = 0; j < inst.jobs(); ++j) machine_of[j] = graph.bins[matching.column_of_row[j]].machine;
  return Assignment(std::move(machine_of));
}

Assignment round(const Instance& inst, const LpSolution& x, const LpTLParams& params) {
  if (x.status != LpStatus::Feasible) fail(ErrorKind::Infeasible, "rounding needs a feasible LP solution");
  if (params.L > params.T) fail(ErrorKind::InvalidInput, "rounding needs L <= T");
  return round_fractional(inst, x.x);
}

}  // namespace makespan
