#include "makespan/lp.hpp"

#include "makespan/errors.hpp"

#include <algorithm>

namespace makespan {

LpProblem build_lp(const Instance& inst, const LpTLParams& params) {
  if (!inst.integral()) fail(ErrorKind::KindMismatch, "LP(T,L) needs integral times");
  LpProblem lp;
  lp.machines = inst.machines();
  lp.jobs = inst.jobs();
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      const Entry& e = inst.entry(i, j);
      if (e && *e <= params.T) lp.variables.push_back({i, j});
    }
  }
  lp.program.variables = lp.variables.size();

  const Rational inv_m = Rational(1) / Rational(inst.machines());
  LinearRow average{{}, Sense::le, params.L};
  std::vector<LinearRow> job_rows(inst.jobs(), LinearRow{{}, Sense::eq, Rational(1)});
  std::vector<LinearRow> machine_rows(inst.machines(), LinearRow{{}, Sense::le, Rational(params.T)});
  for (std::size_t v = 0; v < lp.variables.size(); ++v) {
    const auto [i, j] = lp.variables[v];
    const Rational p(inst.time(i, j));
    average.terms.emplace_back(v, p * inv_m);
    job_rows[j].terms.emplace_back(v, Rational(1));
    machine_rows[i].terms.emplace_back(v, p);
  }
  lp.program.rows.push_back(std::move(average));
  for (auto& row : job_rows) lp.program.rows.push_back(std::move(row));
  for (auto& row : machine_rows) lp.program.rows.push_back(std::move(row));
  return lp;
}

LpSolution solve_feasibility(const LpProblem& lp, const SimplexOptions& options) {
  const LinearSolution raw = find_feasible_point(lp.program, options);
  LpSolution solution;
  solution.status = raw.status;
  solution.x = FractionalAssignment(lp.machines, lp.jobs);
  if (raw.status == LpStatus::Feasible) {
    for (std::size_t v = 0; v < lp.variables.size(); ++v) {
      solution.x.at(lp.variables[v].machine, lp.variables[v].job) = raw.values[v];
    }
  }
  return solution;
}

bool lp_feasible(const Instance& inst, const LpTLParams& params) {
  return solve_feasibility(build_lp(inst, params)).status == LpStatus::Feasible;
}

Time lower_time_bound(const Instance& inst) {
  Time bound = 0;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    std::optional<Time> best;
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      const Entry& e = inst.entry(i, j);
      if (e && (!best || *e < *best)) best = e;
    }
    bound = std::max(bound, *best);
  }
  return bound;
}

Time upper_time_bound(const Instance& inst) {
  Time total = 0;
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      const Entry& e = inst.entry(i, j);
      if (e) total += *e;
    }
  }
  return total;
}

LpTLParams minimal_TL(const Instance& inst) {
  if (!inst.integral()) fail(ErrorKind::KindMismatch, "LP(T,L) needs integral times");
  Time lo = lower_time_bound(inst);
  Time hi = upper_time_bound(inst);
  while (lo < hi) {
    const Time mid = lo + (hi - lo) / 2;
    if (lp_feasible(inst, {mid, Rational(mid)})) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Time T = lo;
  const auto m = static_cast<Time>(inst.machines());
  Time q_lo = 0;
  Time q_hi = T * m;
  while (q_lo < q_hi) {
    const Time mid = q_lo + (q_hi - q_lo) / 2;
    if (lp_feasible(inst, {T, Rational(mid) / Rational(m)})) {
      q_hi = mid;
    } else {
      q_lo = mid + 1;
    }
  }
  return {T, Rational(q_lo) / Rational(m)};
}

}  // namespace makespan
