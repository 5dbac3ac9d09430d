#include "makespan/generators.hpp"

#include "makespan/errors.hpp"
#include "makespan/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace makespan {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) fail(ErrorKind::InvalidInput, "empty draw range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t t = 0; t < k; ++t) std::swap(pool[t], pool[t + index(n - t)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

void require_size(std::size_t machines, std::size_t jobs, Time p_max) {
  if (machines == 0) fail(ErrorKind::InvalidInput, "need at least one machine");
  if (jobs == 0) fail(ErrorKind::InvalidInput, "need at least one job");
  if (p_max < 1) fail(ErrorKind::InvalidInput, "p_max must be at least 1");
}

}  // namespace

Instance fully_feasible_planted(std::size_t machines, std::size_t jobs, Time p_max, std::size_t feasible,
                                std::uint64_t seed) {
  require_size(machines, jobs, p_max);
  if (feasible == 0 || feasible > machines) fail(ErrorKind::InvalidInput, "feasible count must lie in [1, m]");
  Rng rng(seed);
  const Time high = static_cast<Time>(jobs) * p_max;
  TimeMatrix rows(machines, std::vector<Entry>(jobs));
  for (JobIndex j = 0; j < jobs; ++j) {
    std::vector<bool> chosen(machines, false);
    for (std::size_t i : rng.subset(machines, feasible)) chosen[i] = true;
    for (MachineIndex i = 0; i < machines; ++i) {
      if (!chosen[i]) {
        rows[i][j] = rng.uniform(high + 1, 2 * high);
      } else {
        rows[i][j] = j == 0 ? p_max : rng.uniform(1, p_max);
      }
    }
  }
  return Instance::unrelated(std::move(rows));
}

Instance restricted_random(std::size_t machines, std::size_t jobs, Time p_max, std::size_t min_feasible,
                           std::uint64_t seed) {
  require_size(machines, jobs, p_max);
  if (min_feasible == 0 || min_feasible > machines) fail(ErrorKind::InvalidInput, "feasible count must lie in [1, m]");
  Rng rng(seed);
  TimeMatrix rows(machines, std::vector<Entry>(jobs));
  for (JobIndex j = 0; j < jobs; ++j) {
    const Time p = rng.uniform(1, p_max);
    const auto count = j == 0 ? min_feasible
                              : static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(min_feasible),
                                                                     static_cast<std::int64_t>(machines)));
    for (std::size_t i : rng.subset(machines, count)) rows[i][j] = p;
  }
  return Instance::restricted(std::move(rows));
}

Instance uniform_bounded_ratio(std::size_t machines, std::size_t jobs, Time p_max, const Rational& ratio,
                               std::int64_t denominator, std::uint64_t seed) {
  require_size(machines, jobs, p_max);
  if (ratio < 1) fail(ErrorKind::InvalidInput, "speed ratio must be at least 1");
  if (denominator < 1) fail(ErrorKind::InvalidInput, "speed denominator must be positive");
  Rng rng(seed);
  const std::int64_t top = to_int64(floor_of(ratio * Rational(denominator)));
  std::vector<Rational> speeds;
  for (MachineIndex i = 0; i < machines; ++i) speeds.push_back(make_rational(rng.uniform(denominator, top), denominator));
  std::vector<Time> p;
  for (JobIndex j = 0; j < jobs; ++j) p.push_back(rng.uniform(1, p_max));
  return Instance::uniform(std::move(p), std::move(speeds));
}

GraphWithDecomposition graph_balancing_random(std::size_t vertices, std::size_t edges, Time w_max, std::size_t loops,
                                              std::size_t window, std::uint64_t seed) {
  if (vertices < 2) fail(ErrorKind::InvalidInput, "need at least two vertices");
  if (w_max < 1) fail(ErrorKind::InvalidInput, "w_max must be at least 1");
  if (window >= vertices) window = 0;
  Rng rng(seed);
  std::vector<WeightedEdge> list;
  for (std::size_t e = 0; e < edges; ++e) {
    const Vertex u = rng.index(vertices);
    Vertex v = u;
    if (window == 0) {
      while (v == u) v = rng.index(vertices);
    } else {
      const Vertex lo = u >= window ? u - window : 0;
      const Vertex hi = std::min(vertices - 1, u + window);
      while (v == u) v = static_cast<Vertex>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    }
    list.push_back({u, v, rng.uniform(1, w_max)});
  }
  for (std::size_t l = 0; l < loops; ++l) {
    const Vertex u = rng.index(vertices);
    list.push_back({u, u, rng.uniform(1, w_max)});
  }
  TreeDecomposition td;
  if (window == 0) {
    td.bags.emplace_back(vertices);
    std::iota(td.bags[0].begin(), td.bags[0].end(), Vertex{0});
  } else {
    for (Vertex t = 0; t + window < vertices; ++t) {
      std::vector<Vertex> bag(window + 1);
      std::iota(bag.begin(), bag.end(), t);
      td.bags.push_back(std::move(bag));
      if (t > 0) td.tree_edges.emplace_back(t - 1, t);
    }
  }
  return {GraphBalancingInstance(vertices, std::move(list)), std::move(td)};
}

namespace {

Assignment lpt_assignment(const Instance& inst) {
  std::vector<JobIndex> order(inst.jobs());
  std::iota(order.begin(), order.end(), JobIndex{0});
  const auto& p = inst.base_times();
  std::stable_sort(order.begin(), order.end(), [&](JobIndex a, JobIndex b) { return p[a] > p[b]; });
  std::vector<Rational> finish(inst.machines(), Rational(0));
  std::vector<MachineIndex> machine_of(inst.jobs(), 0);
  for (JobIndex j : order) {
    MachineIndex best = 0;
    for (MachineIndex i = 1; i < inst.machines(); ++i) {
      if (finish[i] + inst.rational_time(i, j) < finish[best] + inst.rational_time(best, j)) best = i;
    }
    finish[best] += inst.rational_time(best, j);
    machine_of[j] = best;
  }
  return Assignment(std::move(machine_of));
}

}  // namespace

ReoptInput reopt_perturbation(const PerturbationSpec& spec) {
  require_size(spec.machines, spec.jobs, spec.p_max);
  if (spec.kind != Kind::identical && spec.kind != Kind::uniform) {
    fail(ErrorKind::InvalidInput, "perturbations cover identical and uniform machines");
  }
  if (spec.remove_jobs > spec.jobs) fail(ErrorKind::InvalidInput, "cannot remove more jobs than exist");
  if (spec.remove_machines >= spec.machines + spec.add_machines) fail(ErrorKind::InvalidInput, "no machine would remain");
  if (spec.remove_machines > spec.machines) fail(ErrorKind::InvalidInput, "cannot remove more machines than exist");
  Rng rng(spec.seed);
  const bool uniform = spec.kind == Kind::uniform;
  const std::int64_t top = to_int64(floor_of(spec.ratio * Rational(spec.denominator)));
  auto draw_speed = [&] { return make_rational(rng.uniform(spec.denominator, top), spec.denominator); };

  std::vector<Time> p_old;
  for (JobIndex j = 0; j < spec.jobs; ++j) p_old.push_back(rng.uniform(1, spec.p_max));
  std::vector<Rational> speeds_old;
  if (uniform) {
    for (MachineIndex i = 0; i < spec.machines; ++i) speeds_old.push_back(draw_speed());
  }
  ReoptInput input;
  input.old_instance =
      uniform ? Instance::uniform(p_old, speeds_old) : Instance::identical(spec.machines, p_old);
  input.sigma0 = oracle_within_cap(input.old_instance) ? exact_makespan(input.old_instance).witness
                                                       : lpt_assignment(input.old_instance);
  input.job_ids_old.resize(spec.jobs);
  std::iota(input.job_ids_old.begin(), input.job_ids_old.end(), JobId{0});
  input.machine_ids_old.resize(spec.machines);
  std::iota(input.machine_ids_old.begin(), input.machine_ids_old.end(), MachineId{0});

  std::vector<bool> job_removed(spec.jobs, false);
  for (std::size_t j : rng.subset(spec.jobs, spec.remove_jobs)) job_removed[j] = true;
  std::vector<bool> machine_removed(spec.machines, false);
  for (std::size_t i : rng.subset(spec.machines, spec.remove_machines)) machine_removed[i] = true;

  std::vector<Time> p_new;
  for (JobIndex j = 0; j < spec.jobs; ++j) {
    if (job_removed[j]) continue;
    p_new.push_back(p_old[j]);
    input.job_ids_new.push_back(input.job_ids_old[j]);
  }
  for (std::size_t t = 0; t < spec.add_jobs; ++t) {
    p_new.push_back(rng.uniform(1, spec.p_max));
    input.job_ids_new.push_back(static_cast<JobId>(spec.jobs + t));
  }
  std::vector<Rational> speeds_new;
  for (MachineIndex i = 0; i < spec.machines; ++i) {
    if (machine_removed[i]) continue;
    input.machine_ids_new.push_back(input.machine_ids_old[i]);
    if (uniform) speeds_new.push_back(speeds_old[i]);
  }
  for (std::size_t t = 0; t < spec.add_machines; ++t) {
    input.machine_ids_new.push_back(static_cast<MachineId>(spec.machines + t));
    if (uniform) speeds_new.push_back(draw_speed());
  }
  const std::size_t m_new = input.machine_ids_new.size();
  input.new_instance = uniform ? Instance::uniform(std::move(p_new), std::move(speeds_new))
                               : Instance::identical(m_new, std::move(p_new));
  if (uniform) input.speed_ratio_bound = spec.ratio;
  prior_placement(input);
  return input;
}

}  // namespace makespan
