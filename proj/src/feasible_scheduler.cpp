#include "makespan/feasible_scheduler.hpp"

#include "makespan/errors.hpp"
#include "makespan/matching.hpp"
#include "makespan/rounding.hpp"

namespace makespan {

BalanceView balance_view(const Instance& inst, const Assignment& a, Time T, const Rational& L,
                         const Rational& gamma, Time threshold) {
  const std::vector<Time> load = integral_loads(inst, a);
  BalanceView view;
  view.gamma = gamma;
  view.jmax.assign(inst.machines(), std::nullopt);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    auto& best = view.jmax[a[j]];
    if (!best || inst.time(a[j], j) > inst.time(a[j], *best)) best = j;
  }
  const Rational bad_level = Rational(T) + gamma * L;
  const Rational good_level = gamma * L;
  std::vector<bool> is_good(inst.machines(), false);
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    const Rational l(load[i]);
    if (l > bad_level) view.bad.push_back(i);
    if (l <= good_level) {
      view.good.push_back(i);
      is_good[i] = true;
    }
  }
  view.good_for.resize(inst.jobs());
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      const Entry& e = inst.entry(i, j);
      if (is_good[i] && e && *e <= threshold) view.good_for[j].push_back(i);
    }
  }
  return view;
}

BalanceView balance_view(const Instance& inst, const Assignment& a, Time T, const Rational& L,
                         const FeasibilityProfile& profile, std::size_t t) {
  const Rational& phi = profile.phi.at(t);
  if (phi <= 0) fail(ErrorKind::InvalidInput, "threshold with zero feasibility parameter");
  return balance_view(inst, a, T, L, Rational(1) / phi, profile.thresholds.at(t));
}

std::optional<Assignment> transfer_largest_jobs(const Instance& inst, const Assignment& a, const BalanceView& view) {
  std::vector<std::size_t> good_slot(inst.machines(), 0);
  for (std::size_t g = 0; g < view.good.size(); ++g) good_slot[view.good[g]] = g;
  std::vector<std::vector<std::size_t>> adjacency(view.bad.size());
  for (std::size_t b = 0; b < view.bad.size(); ++b) {
    const JobIndex j = *view.jmax[view.bad[b]];
    for (MachineIndex i : view.good_for[j]) adjacency[b].push_back(good_slot[i]);
  }
  const auto matching = maximum_matching(adjacency, view.good.size());
  Assignment result = a;
  for (std::size_t b = 0; b < view.bad.size(); ++b) {
    if (!matching[b]) return std::nullopt;
    result.assign(*view.jmax[view.bad[b]], view.good[*matching[b]]);
  }
  return result;
}

FullyFeasibleTrace schedule_fully_feasible_traced(const Instance& inst) {
  FullyFeasibleTrace trace;
  if (inst.jobs() == 0) return trace;
  trace.params = minimal_TL(inst);
  const LpSolution x = solve_feasibility(build_lp(inst, trace.params));
  trace.rounded = round(inst, x, trace.params);
  trace.profile = feasibility_profile(inst);
  const Rational T(trace.params.T);
  for (std::size_t t = 0; t < trace.profile.thresholds.size(); ++t) {
    const Rational& phi = trace.profile.phi[t];
    if (phi == 0 || phi * T < trace.params.L) continue;
    const BalanceView view = balance_view(inst, trace.rounded, trace.params.T, trace.params.L, trace.profile, t);
    auto moved = transfer_largest_jobs(inst, trace.rounded, view);
    if (!moved) continue;
    const Rational makespan = load_profile(inst, *moved).makespan;
    trace.candidates.push_back({t, std::move(*moved), makespan});
  }
  trace.result = trace.rounded;
  for (std::size_t c = 0; c < trace.candidates.size(); ++c) {
    if (!trace.chosen || trace.candidates[c].makespan < trace.candidates[*trace.chosen].makespan) trace.chosen = c;
  }
  if (trace.chosen) trace.result = trace.candidates[*trace.chosen].assignment;
  return trace;
}

Assignment schedule_fully_feasible(const Instance& inst) { return schedule_fully_feasible_traced(inst).result; }

}  // namespace makespan
