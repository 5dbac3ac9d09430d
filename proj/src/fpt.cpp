#include "makespan/fpt.hpp"

#include "makespan/errors.hpp"
#include "makespan/rounding.hpp"

namespace makespan {

MilpParams milp_params(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap) {
  if (!inst.integral()) fail(ErrorKind::KindMismatch, "MILP scheme needs integral times");
  if (eps <= 0 || eps > 1) fail(ErrorKind::InvalidInput, "epsilon must lie in (0, 1]");
  if (k_cap > 62) fail(ErrorKind::InvalidInput, "large-pair cap above 62");
  MilpParams params{eps, T, {}, k_cap};
  const Rational cut = eps * Rational(T);
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      const Entry& e = inst.entry(i, j);
      if (e && *e <= T && Rational(*e) > cut) params.large_pairs.push_back({i, j});
    }
  }
  if (params.k() > k_cap) {
    fail(ErrorKind::ParameterBudgetExceeded,
         std::to_string(params.k()) + " large pairs exceed the cap of " + std::to_string(k_cap));
  }
  return params;
}

bool pattern_bit(const MilpParams& params, std::uint64_t pattern, std::size_t idx) {
  return ((pattern >> (params.k() - 1 - idx)) & 1u) != 0;
}

std::optional<FractionalAssignment> solve_pattern(const Instance& inst, const MilpParams& params,
                                                  std::uint64_t pattern) {
  std::vector<bool> fixed_job(inst.jobs(), false);
  std::vector<Time> fixed_load(inst.machines(), 0);
  FractionalAssignment x(inst.machines(), inst.jobs());
  for (std::size_t idx = 0; idx < params.k(); ++idx) {
    if (!pattern_bit(params, pattern, idx)) continue;
    const auto [i, j] = params.large_pairs[idx];
    if (fixed_job[j]) return std::nullopt;
    fixed_job[j] = true;
    fixed_load[i] += inst.time(i, j);
    if (fixed_load[i] > params.T) return std::nullopt;
    x.at(i, j) = 1;
  }

  // Residual LP over small pairs of the unfixed jobs.
  const Rational cut = params.epsilon * Rational(params.T);
  LinearProgram lp;
  std::vector<PairVariable> vars;
  std::vector<LinearRow> job_rows(inst.jobs(), LinearRow{{}, Sense::eq, Rational(1)});
  std::vector<LinearRow> machine_rows;
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    machine_rows.push_back(LinearRow{{}, Sense::le, Rational(params.T - fixed_load[i])});
  }
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      const Entry& e = inst.entry(i, j);
      if (fixed_job[j] || !e || Rational(*e) > cut) continue;
      const std::size_t v = vars.size();
      vars.push_back({i, j});
      job_rows[j].terms.emplace_back(v, Rational(1));
      machine_rows[i].terms.emplace_back(v, Rational(*e));
    }
  }
  lp.variables = vars.size();
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!fixed_job[j]) lp.rows.push_back(std::move(job_rows[j]));
  }
  for (auto& row : machine_rows) lp.rows.push_back(std::move(row));
  const LinearSolution solution = find_feasible_point(lp);
  if (solution.status != LpStatus::Feasible) return std::nullopt;
  for (std::size_t v = 0; v < vars.size(); ++v) x.at(vars[v].machine, vars[v].job) = solution.values[v];
  return x;
}

MilpOutcome solve_milp_scheme_traced(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap) {
  MilpOutcome outcome;
  outcome.params = milp_params(inst, eps, T, k_cap);
  if (inst.jobs() == 0) return outcome;
  bool found = false;
  const std::uint64_t patterns = std::uint64_t{1} << outcome.params.k();
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    auto x = solve_pattern(inst, outcome.params, pattern);
    if (!x) continue;
    ++outcome.feasible_patterns;
    Assignment a = round_fractional(inst, *x);
    Rational makespan = load_profile(inst, a).makespan;
    if (!found || makespan < outcome.makespan) {
      found = true;
      outcome.pattern = pattern;
      outcome.x = std::move(*x);
      outcome.assignment = std::move(a);
      outcome.makespan = std::move(makespan);
    }
  }
  if (!found) fail(ErrorKind::Infeasible, "no pattern admits a feasible residual LP at T=" + std::to_string(T));
  return outcome;
}

Assignment solve_milp_scheme(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap) {
  return solve_milp_scheme_traced(inst, eps, T, k_cap).assignment;
}

bool milp_feasible(const Instance& inst, const Rational& eps, Time T, std::size_t k_cap) {
  const MilpParams params = milp_params(inst, eps, T, k_cap);
  if (inst.jobs() == 0) return true;
  const std::uint64_t patterns = std::uint64_t{1} << params.k();
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    if (solve_pattern(inst, params, pattern)) return true;
  }
  return false;
}

Time minimal_T_for_scheme(const Instance& inst, const Rational& eps, std::size_t k_cap) {
  if (!inst.integral()) fail(ErrorKind::KindMismatch, "MILP scheme needs integral times");
  Time lo = lower_time_bound(inst);
  Time hi = upper_time_bound(inst);
  while (lo < hi) {
    const Time mid = lo + (hi - lo) / 2;
    if (milp_feasible(inst, eps, mid, k_cap)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace makespan
