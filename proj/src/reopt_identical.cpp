#include "makespan/reopt_identical.hpp"

#include "makespan/errors.hpp"
#include "makespan/matching.hpp"
#include "makespan/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace makespan {

namespace {

void require_identical(const Instance& inst) {
  if (inst.kind() != Kind::identical) fail(ErrorKind::KindMismatch, "expected an identical-machines instance");
}

Assignment longest_processing_time(const Instance& inst) {
  const auto& p = inst.base_times();
  std::vector<JobIndex> order(inst.jobs());
  std::iota(order.begin(), order.end(), JobIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](JobIndex a, JobIndex b) { return p[a] > p[b]; });
  std::vector<Time> load(inst.machines(), 0);
  std::vector<MachineIndex> machine_of(inst.jobs());
  for (JobIndex j : order) {
    const auto it = std::min_element(load.begin(), load.end());
    machine_of[j] = static_cast<MachineIndex>(it - load.begin());
    *it += p[j];
  }
  return Assignment(std::move(machine_of));
}

Time integral_makespan(const Instance& inst, const Assignment& a) {
  const auto load = integral_loads(inst, a);
  return *std::max_element(load.begin(), load.end());
}

// Mixed-radix encoding of count vectors.
struct Radix {
  std::vector<std::int64_t> base;
  std::vector<std::int64_t> weight;
  std::int64_t size = 1;

  explicit Radix(const std::vector<std::int64_t>& counts, std::int64_t cap) {
    for (std::int64_t c : counts) {
      weight.push_back(size);
      base.push_back(c + 1);
      if (size > cap / (c + 1)) fail(ErrorKind::BudgetExceeded, "dual-approximation state space too large");
      size *= c + 1;
    }
  }
  std::int64_t encode(const std::vector<std::int64_t>& v) const {
    std::int64_t code = 0;
    for (std::size_t k = 0; k < v.size(); ++k) code += v[k] * weight[k];
    return code;
  }
  std::int64_t digit(std::int64_t code, std::size_t k) const { return (code / weight[k]) % base[k]; }
};

// All count vectors bounded by `counts` whose weighted size fits `capacity`.
void bin_patterns(const std::vector<std::int64_t>& units, const std::vector<std::int64_t>& counts,
                  std::int64_t capacity, std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> current(units.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, std::int64_t room) -> void {
    if (k == units.size()) {
      out.push_back(current);
      return;
    }
    for (std::int64_t take = 0; take <= counts[k] && take * units[k] <= room; ++take) {
      current[k] = take;
      self(self, k + 1, room - take * units[k]);
    }
    current[k] = 0;
  };
  rec(rec, 0, capacity);
}

}  // namespace

std::optional<Assignment> dual_approximation(const Instance& inst, Time T, const Rational& eps0) {
  require_identical(inst);
  const auto& p = inst.base_times();
  const std::size_t m = inst.machines();
  if (inst.jobs() == 0) return Assignment();
  const Time total = std::accumulate(p.begin(), p.end(), Time{0});
  if (*std::max_element(p.begin(), p.end()) > T || total > T * static_cast<Time>(m)) return std::nullopt;
  if (T == 0) return Assignment(std::vector<MachineIndex>(inst.jobs(), 0));

  const Rational unit = eps0 * eps0 * Rational(T);
  const std::int64_t capacity = to_int64(floor_of(Rational(1) / (eps0 * eps0)));
  std::vector<std::int64_t> units;
  std::vector<std::optional<std::size_t>> class_of(inst.jobs());
  std::vector<std::int64_t> job_units(inst.jobs(), 0);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (Rational(p[j]) > eps0 * Rational(T)) {
      job_units[j] = to_int64(floor_of(Rational(p[j]) / unit));
      units.push_back(job_units[j]);
    }
  }
  std::sort(units.begin(), units.end(), std::greater<>());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  std::vector<std::int64_t> counts(units.size(), 0);
  std::vector<std::vector<JobIndex>> jobs_of_class(units.size());
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (job_units[j] == 0 && !(Rational(p[j]) > eps0 * Rational(T))) continue;
    const auto c = static_cast<std::size_t>(std::find(units.begin(), units.end(), job_units[j]) - units.begin());
    class_of[j] = c;
    ++counts[c];
    jobs_of_class[c].push_back(j);
  }

  const Radix radix(counts, 4'000'000);
  std::vector<std::vector<std::int64_t>> patterns;
  bin_patterns(units, counts, capacity, patterns);
  std::vector<std::int64_t> pattern_code;
  for (const auto& pat : patterns) pattern_code.push_back(radix.encode(pat));
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> bins(radix.size, kUnreached);
  std::vector<std::size_t> choice(radix.size, 0);
  bins[0] = 0;
  for (std::int64_t s = 1; s < radix.size; ++s) {
    for (std::size_t q = 0; q < patterns.size(); ++q) {
      if (pattern_code[q] == 0) continue;
      bool fits = true;
      for (std::size_t k = 0; k < units.size() && fits; ++k) fits = patterns[q][k] <= radix.digit(s, k);
      if (!fits) continue;
      const std::int64_t rest = bins[s - pattern_code[q]];
      if (rest != kUnreached && rest + 1 < bins[s]) {
        bins[s] = rest + 1;
        choice[s] = q;
      }
    }
  }
  const std::int64_t full = radix.size - 1;
  if (bins[full] > static_cast<std::int64_t>(m)) return std::nullopt;

  std::vector<MachineIndex> machine_of(inst.jobs(), 0);
  std::vector<Time> load(m, 0);
  std::vector<std::size_t> next_of_class(units.size(), 0);
  MachineIndex machine = 0;
  for (std::int64_t s = full; s > 0; s -= pattern_code[choice[s]], ++machine) {
    const auto& pat = patterns[choice[s]];
    for (std::size_t k = 0; k < units.size(); ++k) {
      for (std::int64_t t = 0; t < pat[k]; ++t) {
        const JobIndex j = jobs_of_class[k][next_of_class[k]++];
        machine_of[j] = machine;
        load[machine] += p[j];
      }
    }
  }
  std::vector<JobIndex> small;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!class_of[j]) small.push_back(j);
  }
  std::stable_sort(small.begin(), small.end(), [&](JobIndex a, JobIndex b) { return p[a] > p[b]; });
  for (JobIndex j : small) {
    const auto it = std::min_element(load.begin(), load.end());
    if (*it > T) return std::nullopt;
    machine_of[j] = static_cast<MachineIndex>(it - load.begin());
    *it += p[j];
  }
  return Assignment(std::move(machine_of));
}

Time ptas_target(const Instance& inst, const Rational& eps0, TargetMode mode) {
  require_identical(inst);
  if (eps0 <= 0) fail(ErrorKind::InvalidInput, "eps0 must be positive");
  if (inst.jobs() == 0) return 0;
  if (mode == TargetMode::exact || (mode == TargetMode::automatic && inst.jobs() <= 12)) {
    return to_int64(numerator(exact_makespan(inst).t_opt));
  }
  const auto& p = inst.base_times();
  const auto m = static_cast<Time>(inst.machines());
  const Time total = std::accumulate(p.begin(), p.end(), Time{0});
  const Time hi_start = integral_makespan(inst, longest_processing_time(inst));
  Time lo = std::max(*std::max_element(p.begin(), p.end()), (total + m - 1) / m);
  Time hi = hi_start;
  while (lo < hi) {
    const Time mid = lo + (hi - lo) / 2;
    if (dual_approximation(inst, mid, eps0)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const auto schedule = dual_approximation(inst, lo, eps0);
  if (!schedule) return hi_start;
  return std::min(integral_makespan(inst, *schedule), hi_start);
}

Rational ItemScale::rounded(JobIndex j) const {
  if (!class_of[j]) return alpha[j];
  return Rational(class_units[*class_of[j]]) * unit();
}

ItemScale make_item_scale(const Instance& inst, Time T, const Rational& eps0) {
  require_identical(inst);
  if (T <= 0) fail(ErrorKind::InvalidInput, "item scale needs a positive target");
  ItemScale scale;
  scale.T = T;
  scale.eps0 = eps0;
  scale.capacity_units = to_int64(floor_of(Rational(1) / (eps0 * eps0)));
  const auto& p = inst.base_times();
  std::vector<std::int64_t> units_of(inst.jobs(), 0);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    scale.alpha.push_back(Rational(p[j]) / Rational(T));
    if (scale.alpha[j] > eps0) {
      units_of[j] = to_int64(floor_of(scale.alpha[j] / scale.unit()));
      scale.class_units.push_back(units_of[j]);
    }
  }
  std::sort(scale.class_units.begin(), scale.class_units.end(), std::greater<>());
  scale.class_units.erase(std::unique(scale.class_units.begin(), scale.class_units.end()), scale.class_units.end());
  scale.class_count.assign(scale.class_units.size(), 0);
  scale.class_of.assign(inst.jobs(), std::nullopt);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!(scale.alpha[j] > eps0)) continue;
    const auto c = static_cast<std::size_t>(
        std::find(scale.class_units.begin(), scale.class_units.end(), units_of[j]) - scale.class_units.begin());
    scale.class_of[j] = c;
    ++scale.class_count[c];
  }
  return scale;
}

void enumerate_configurations(const ItemScale& scale, std::size_t m,
                              const std::function<void(const Configuration&)>& visit, std::size_t cap) {
  std::vector<std::vector<std::int64_t>> patterns;
  bin_patterns(scale.class_units, scale.class_count, scale.capacity_units, patterns);
  std::int64_t remaining_volume = 0;
  for (std::size_t c = 0; c < scale.class_units.size(); ++c) remaining_volume += scale.class_units[c] * scale.class_count[c];

  std::vector<std::int64_t> remaining = scale.class_count;
  Configuration current;
  std::size_t produced = 0;
  auto rec = [&](auto&& self, std::size_t first, std::size_t bins_left, std::int64_t volume) -> void {
    if (bins_left == 0) {
      if (volume != 0) return;
      if (++produced > cap) fail(ErrorKind::ConfigurationBudgetExceeded, "more than " + std::to_string(cap) + " configurations");
      visit(current);
      return;
    }
    if (volume > static_cast<std::int64_t>(bins_left) * scale.capacity_units) return;
    for (std::size_t q = first; q < patterns.size(); ++q) {
      const auto& pat = patterns[q];
      bool fits = true;
      std::int64_t used = 0;
      for (std::size_t c = 0; c < pat.size() && fits; ++c) {
        fits = pat[c] <= remaining[c];
        used += pat[c] * scale.class_units[c];
      }
      if (!fits) continue;
      for (std::size_t c = 0; c < pat.size(); ++c) remaining[c] -= pat[c];
      current.bins.push_back(pat);
      self(self, q, bins_left - 1, volume - used);
      current.bins.pop_back();
      for (std::size_t c = 0; c < pat.size(); ++c) remaining[c] += pat[c];
    }
  };
  rec(rec, 0, m, remaining_volume);
}

std::optional<std::vector<std::size_t>> relaxed_first_fit(std::vector<Rational> bin_loads,
                                                          const std::vector<Rational>& items,
                                                          const Rational& capacity) {
  std::vector<std::size_t> placement;
  for (const auto& item : items) {
    std::size_t b = 0;
    while (b < bin_loads.size() && bin_loads[b] + item > capacity) ++b;
    if (b == bin_loads.size()) return std::nullopt;
    bin_loads[b] += item;
    placement.push_back(b);
  }
  return placement;
}

namespace {

struct SmallSplit {
  std::vector<JobIndex> kept;
  std::vector<JobIndex> omitted;
};

// Adds the machine's own small items to the bin, then drops the largest
// (ties: larger job ID first) until the rounded total is at most one.
SmallSplit split_small(const ItemScale& scale, const std::vector<JobId>& ids, std::vector<JobIndex> own_small,
                       const std::vector<std::int64_t>& bin) {
  Rational total = 0;
  for (std::size_t c = 0; c < bin.size(); ++c) total += Rational(bin[c] * scale.class_units[c]) * scale.unit();
  for (JobIndex j : own_small) total += scale.alpha[j];
  std::stable_sort(own_small.begin(), own_small.end(), [&](JobIndex a, JobIndex b) {
    if (scale.alpha[a] != scale.alpha[b]) return scale.alpha[a] > scale.alpha[b];
    return ids[a] > ids[b];
  });
  SmallSplit split;
  std::size_t k = 0;
  while (k < own_small.size() && total > 1) {
    total -= scale.alpha[own_small[k]];
    split.omitted.push_back(own_small[k++]);
  }
  split.kept.assign(own_small.begin() + static_cast<std::ptrdiff_t>(k), own_small.end());
  return split;
}

}  // namespace

MatchOutcome match_and_cost(const ReoptInput& input, const ItemScale& scale, const Configuration& config) {
  const Instance& inst = input.new_instance;
  const std::size_t m = inst.machines();
  const PriorPlacement prior = prior_placement(input);
  if (config.bins.size() != m) fail(ErrorKind::InvalidInput, "configuration needs one bin per machine");
  const std::size_t classes = scale.class_units.size();

  std::vector<std::vector<std::int64_t>> own_large(m, std::vector<std::int64_t>(classes, 0));
  std::vector<std::vector<JobIndex>> own_small(m);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!prior.machine[j]) continue;
    if (scale.large(j)) {
      ++own_large[*prior.machine[j]][*scale.class_of[j]];
    } else {
      own_small[*prior.machine[j]].push_back(j);
    }
  }

  // Removed old machines only add a constant, so machines of the new instance are the rows.
  CostMatrix cost(m, std::vector<std::optional<std::int64_t>>(m));
  for (MachineIndex i = 0; i < m; ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      std::int64_t c = 0;
      for (std::size_t k = 0; k < classes; ++k) c += std::max<std::int64_t>(0, config.bins[b][k] - own_large[i][k]);
      c += static_cast<std::int64_t>(split_small(scale, input.job_ids_new, own_small[i], config.bins[b]).omitted.size());
      cost[i][b] = c;
    }
  }
  const AssignmentResult matching = min_cost_assignment(cost, m);

  MatchOutcome outcome;
  outcome.matching_cost = matching.cost;
  outcome.bin_of_machine = matching.column_of_row;
  std::vector<MachineIndex> machine_of(inst.jobs(), 0);
  std::vector<bool> placed(inst.jobs(), false);
  std::vector<std::vector<std::int64_t>> open_slots(m, std::vector<std::int64_t>(classes, 0));
  for (MachineIndex i = 0; i < m; ++i) {
    const auto& bin = config.bins[matching.column_of_row[i]];
    std::vector<std::int64_t> want = bin;
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      if (!scale.large(j) || !prior.machine[j] || *prior.machine[j] != i) continue;
      auto& w = want[*scale.class_of[j]];
      if (w == 0) continue;
      --w;
      machine_of[j] = i;
      placed[j] = true;
    }
    open_slots[i] = want;
  }
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!scale.large(j) || placed[j]) continue;
    const std::size_t c = *scale.class_of[j];
    MachineIndex i = 0;
    while (i < m && open_slots[i][c] == 0) ++i;
    if (i == m) fail(ErrorKind::InvalidInput, "configuration does not cover the large items");
    --open_slots[i][c];
    machine_of[j] = i;
    placed[j] = true;
  }

  std::vector<JobIndex> pool;
  for (MachineIndex i = 0; i < m; ++i) {
    const SmallSplit split =
        split_small(scale, input.job_ids_new, own_small[i], config.bins[matching.column_of_row[i]]);
    for (JobIndex j : split.kept) {
      machine_of[j] = i;
      placed[j] = true;
    }
    pool.insert(pool.end(), split.omitted.begin(), split.omitted.end());
  }
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!scale.large(j) && !prior.machine[j]) pool.push_back(j);
  }
  std::sort(pool.begin(), pool.end(), [&](JobIndex a, JobIndex b) {
    if (scale.alpha[a] != scale.alpha[b]) return scale.alpha[a] > scale.alpha[b];
    return a < b;
  });

  std::vector<Rational> bin_load(m, Rational(0));
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (placed[j]) bin_load[machine_of[j]] += scale.alpha[j];
  }
  std::vector<Rational> pool_sizes;
  for (JobIndex j : pool) pool_sizes.push_back(scale.alpha[j]);
  const auto fit = relaxed_first_fit(bin_load, pool_sizes, Rational(1) + scale.eps0);
  if (!fit) fail(ErrorKind::RelaxedPackingFailed, "a small item found no bin within 1 + eps0");
  for (std::size_t k = 0; k < pool.size(); ++k) machine_of[pool[k]] = (*fit)[k];

  outcome.assignment = Assignment(std::move(machine_of));
  outcome.cost = transition_cost(prior, outcome.assignment);
  outcome.makespan = load_profile(inst, outcome.assignment).makespan;
  return outcome;
}

IdenticalReoptResult reoptimize_identical(const ReoptInput& input, const Rational& eps,
                                          const IdenticalReoptOptions& options) {
  require_identical(input.old_instance);
  require_identical(input.new_instance);
  if (eps <= 0) fail(ErrorKind::InvalidInput, "epsilon must be positive");
  const Instance& inst = input.new_instance;
  const PriorPlacement prior = prior_placement(input);
  IdenticalReoptResult result;
  if (inst.jobs() == 0) return result;
  const Rational eps0 = eps / 4;
  result.T = ptas_target(inst, eps0, options.target);
  if (result.T == 0) {
    std::vector<MachineIndex> machine_of(inst.jobs(), 0);
    for (JobIndex j = 0; j < inst.jobs(); ++j) machine_of[j] = prior.machine[j].value_or(0);
    result.assignment = Assignment(std::move(machine_of));
    result.cost = transition_cost(prior, result.assignment);
    return result;
  }
  const ItemScale scale = make_item_scale(inst, result.T, eps0);
  for (const auto& a : scale.alpha) result.sum_alpha += a;
  if (result.sum_alpha > Rational(inst.machines())) {
    fail(ErrorKind::RelaxedPackingFailed, "item sizes exceed the machine count; target below the optimum");
  }
  bool found = false;
  enumerate_configurations(
      scale, inst.machines(),
      [&](const Configuration& config) {
        ++result.configurations;
        MatchOutcome outcome = match_and_cost(input, scale, config);
        const bool better = !found || outcome.cost < result.cost ||
                            (outcome.cost == result.cost &&
                             (outcome.makespan < result.makespan ||
                              (outcome.makespan == result.makespan && outcome.assignment < result.assignment)));
        if (!better) return;
        found = true;
        result.cost = outcome.cost;
        result.makespan = outcome.makespan;
        result.assignment = std::move(outcome.assignment);
      },
      options.configuration_cap);
  if (!found) fail(ErrorKind::RelaxedPackingFailed, "no configuration of the large items");
  if (result.makespan > (Rational(1) + eps0) * Rational(result.T)) {
    fail(ErrorKind::RelaxedPackingFailed, "final load exceeds (1 + eps0) T");
  }
  return result;
}

}  // namespace makespan
