#include "makespan/reopt_uniform.hpp"

#include "makespan/errors.hpp"
#include "makespan/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace makespan {

namespace {

Rational power(const Rational& base, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= base;
  return r;
}

std::int64_t capped(const BigInt& value, std::int64_t cap) {
  return value > BigInt(cap) ? cap : to_int64(value);
}

void require_uniform(const Instance& inst) {
  if (inst.kind() != Kind::uniform) fail(ErrorKind::KindMismatch, "expected a uniform-machines instance");
}

std::vector<std::int64_t> class_counts(const std::vector<PieceClass>& classes) {
  std::vector<std::int64_t> counts;
  for (const auto& c : classes) counts.push_back(static_cast<std::int64_t>(c.jobs.size()));
  return counts;
}

}  // namespace

int size_interval(const Rational& x, const Rational& eps) {
  if (x <= 0 || x > 1) fail(ErrorKind::InvalidInput, "size interval needs 0 < x <= 1");
  int k = 0;
  Rational bound = eps;
  while (x <= bound) {
    ++k;
    bound *= eps;
  }
  return k;
}

Rational UniformScale::grid(int k) const { return power(eps, k); }

Rational UniformScale::rounded(JobIndex j) const {
  if (!interval[j]) return Rational(0);
  return Rational(units[j]) * grid(*interval[j] + 2);
}

Rational UniformScale::volume_from(int k) const {
  Rational total = 0;
  for (JobIndex j = 0; j < size.size(); ++j) {
    if (interval[j] && *interval[j] >= k) total += rounded(j);
  }
  return total;
}

bool UniformScale::enormous_for(MachineIndex i, JobIndex j) const {
  return interval[j] && *interval[j] >= bin_interval[i] + 2;
}

UniformScale make_uniform_scale(const Instance& inst, const Rational& T, const Rational& eps) {
  require_uniform(inst);
  if (eps <= 0 || eps >= 1 || numerator(eps) != 1) fail(ErrorKind::InvalidInput, "eps must be 1/q for an integer q >= 2");
  if (T <= 0) fail(ErrorKind::InvalidInput, "target must be positive");
  UniformScale scale;
  scale.eps = eps;
  scale.T = T;
  const auto& speeds = inst.speeds();
  const Rational fastest = *std::max_element(speeds.begin(), speeds.end());
  int top = 0;
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    scale.capacity.push_back(speeds[i] / fastest);
    scale.bin_interval.push_back(size_interval(scale.capacity[i], eps));
    top = std::max(top, scale.bin_interval[i]);
  }
  scale.bin_order.resize(inst.machines());
  std::iota(scale.bin_order.begin(), scale.bin_order.end(), MachineIndex{0});
  std::stable_sort(scale.bin_order.begin(), scale.bin_order.end(),
                   [&](MachineIndex a, MachineIndex b) { return scale.capacity[a] > scale.capacity[b]; });

  const auto& p = inst.base_times();
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    const Rational q = Rational(p[j]) / (fastest * T);
    if (q > 1) fail(ErrorKind::NoPath, "a piece exceeds the largest bin");
    scale.size.push_back(q);
    if (q == 0) {
      scale.interval.emplace_back();
      scale.units.push_back(0);
      continue;
    }
    const int k = size_interval(q, eps);
    scale.interval.emplace_back(k);
    scale.units.push_back(to_int64(floor_of(q / scale.grid(k + 2))));
    top = std::max(top, k);
  }
  scale.stages = static_cast<std::size_t>(top) + 1;
  scale.classes.assign(scale.stages + 1, {});
  scale.class_of.assign(inst.jobs(), std::nullopt);
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (!scale.interval[j]) continue;
    auto& list = scale.classes[static_cast<std::size_t>(*scale.interval[j])];
    auto it = std::find_if(list.begin(), list.end(), [&](const PieceClass& c) { return c.units == scale.units[j]; });
    if (it == list.end()) {
      list.push_back({*scale.interval[j], scale.units[j], {}});
      it = list.end() - 1;
    }
    it->jobs.push_back(j);
  }
  for (auto& list : scale.classes) {
    std::sort(list.begin(), list.end(), [](const PieceClass& a, const PieceClass& b) { return a.units > b.units; });
    for (std::size_t c = 0; c < list.size(); ++c) {
      for (JobIndex j : list[c].jobs) scale.class_of[j] = c;
    }
  }
  return scale;
}

std::vector<BinPack> StageTable::path_to(std::size_t end) const {
  std::vector<BinPack> packs;
  std::size_t index = end;
  for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
    const StageNode& node = layers[layer][index];
    packs.push_back(node.pack);
    index = node.pred;
  }
  std::reverse(packs.begin(), packs.end());
  return packs;
}

LayeredGraph::LayeredGraph(UniformScale scale, PriorPlacement prior, std::size_t state_cap)
    : scale_(std::move(scale)), prior_(std::move(prior)), state_cap_(state_cap), stage_bins_(scale_.stages) {
  if (prior_.jobs() != scale_.size.size()) fail(ErrorKind::InvalidInput, "prior placement does not match the pieces");
  for (MachineIndex i : scale_.bin_order) stage_bins_[static_cast<std::size_t>(scale_.bin_interval[i])].push_back(i);
  own_.assign(scale_.capacity.size(), {});
  for (auto& per_machine : own_) {
    for (const auto& list : scale_.classes) per_machine.emplace_back(list.size(), 0);
  }
  for (JobIndex j = 0; j < prior_.jobs(); ++j) {
    if (!prior_.machine[j] || !scale_.interval[j]) continue;
    ++own_[*prior_.machine[j]][static_cast<std::size_t>(*scale_.interval[j])][*scale_.class_of[j]];
  }
}

std::int64_t LayeredGraph::cap_v1(std::size_t k) const {
  const int kk = static_cast<int>(k);
  return to_int64(ceil_of(scale_.volume_from(kk) / scale_.grid(kk + 2)));
}

std::int64_t LayeredGraph::cap_v2(std::size_t k) const {
  const int kk = static_cast<int>(k);
  return to_int64(ceil_of(scale_.volume_from(kk + 1) / scale_.grid(kk + 3)));
}

std::int64_t LayeredGraph::cap_v(std::size_t k) const {
  const int kk = static_cast<int>(k);
  return to_int64(ceil_of(scale_.volume_from(kk + 2) / scale_.grid(kk + 4)));
}

LayerState LayeredGraph::initial_state() const {
  LayerState s;
  s.large = class_counts(scale_.classes[0]);
  s.medium = class_counts(scale_.classes[1]);
  return s;
}

std::vector<Transition> LayeredGraph::successors(std::size_t k, std::size_t layer, const LayerState& s) const {
  const MachineIndex machine = stage_bins_[k][layer];
  const int kk = static_cast<int>(k);
  const Rational& capacity = scale_.capacity[machine];
  const auto& large_classes = scale_.classes[k];
  const auto& medium_classes = scale_.classes[k + 1];
  const Rational large_grid = scale_.grid(kk + 2);
  const Rational medium_grid = scale_.grid(kk + 3);
  const Rational slack_grid = scale_.grid(kk + 4);
  const std::int64_t v_cap = cap_v(k);
  const auto& own_large = own_[machine][k];
  const auto& own_medium = own_[machine][k + 1];

  std::vector<Transition> out;
  BinPack pack{machine, kk, std::vector<std::int64_t>(large_classes.size(), 0),
               std::vector<std::int64_t>(medium_classes.size(), 0)};
  const std::size_t total_classes = large_classes.size() + medium_classes.size();
  auto rec = [&](auto&& self, std::size_t c, const Rational& used) -> void {
    if (c == total_classes) {
      Transition t;
      t.pack = pack;
      t.state = s;
      for (std::size_t a = 0; a < pack.large.size(); ++a) {
        t.state.large[a] -= pack.large[a];
        t.cost += static_cast<std::size_t>(own_large[a] - std::min(pack.large[a], own_large[a]));
      }
      for (std::size_t b = 0; b < pack.medium.size(); ++b) {
        t.state.medium[b] -= pack.medium[b];
        t.cost += static_cast<std::size_t>(own_medium[b] - std::min(pack.medium[b], own_medium[b]));
      }
      t.state.v = capped(BigInt(s.v) + ceil_of((capacity - used) / slack_grid), v_cap);
      out.push_back(std::move(t));
      return;
    }
    const bool is_large = c < large_classes.size();
    const std::size_t idx = is_large ? c : c - large_classes.size();
    const Rational piece = is_large ? Rational(large_classes[idx].units) * large_grid
                                    : Rational(medium_classes[idx].units) * medium_grid;
    const std::int64_t available = is_large ? s.large[idx] : s.medium[idx];
    auto& slot = is_large ? pack.large[idx] : pack.medium[idx];
    Rational load = used;
    for (std::int64_t take = 0; take <= available; ++take) {
      if (take > 0) load += piece;
      if (load > capacity) break;
      slot = take;
      self(self, c + 1, load);
    }
    slot = 0;
  };
  rec(rec, 0, Rational(0));
  return out;
}

std::optional<LayerState> LayeredGraph::update(std::size_t k, const LayerState& end) const {
  std::int64_t volume = 0;
  for (std::size_t c = 0; c < end.large.size(); ++c) volume += end.large[c] * scale_.classes[k][c].units;
  if (end.v1 < volume) return std::nullopt;
  if (k + 1 == scale_.stages) {
    if (std::any_of(end.medium.begin(), end.medium.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
    return LayerState{};
  }
  LayerState next;
  next.large = end.medium;
  next.medium = class_counts(scale_.classes[k + 2]);
  const BigInt inverse = denominator(scale_.eps);
  next.v1 = capped(BigInt(end.v1 - volume) * inverse + BigInt(end.v2), cap_v1(k + 1));
  next.v2 = std::min(end.v, cap_v2(k + 1));
  return next;
}

const StageTable& LayeredGraph::explore(std::size_t k, const LayerState& start) {
  auto key = std::make_pair(k, start);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  StageTable table;
  table.layers.push_back({StageNode{start, 0, 0, {}}});
  for (std::size_t layer = 0; layer < stage_bins_[k].size(); ++layer) {
    std::vector<StageNode> next;
    std::map<LayerState, std::size_t> index;
    const auto& prev = table.layers.back();
    for (std::size_t n = 0; n < prev.size(); ++n) {
      for (auto& t : successors(k, layer, prev[n].state)) {
        const std::size_t cost = prev[n].cost + t.cost;
        auto [it, fresh] = index.try_emplace(t.state, next.size());
        if (fresh) {
          next.push_back(StageNode{std::move(t.state), cost, n, std::move(t.pack)});
        } else if (cost < next[it->second].cost) {
          next[it->second].cost = cost;
          next[it->second].pred = n;
          next[it->second].pack = std::move(t.pack);
        }
      }
    }
    states_ += next.size();
    if (states_ > state_cap_) fail(ErrorKind::StateBudgetExceeded, "layered graph exceeds " + std::to_string(state_cap_) + " states");
    table.layers.push_back(std::move(next));
  }
  return memo_.emplace(std::move(key), std::move(table)).first->second;
}

LayeredGraph build_layered_graph(const ReoptInput& input, const Rational& T, const Rational& eps,
                                 std::size_t state_cap) {
  require_uniform(input.new_instance);
  return LayeredGraph(make_uniform_scale(input.new_instance, T, eps), prior_placement(input), state_cap);
}

void for_each_path(const LayeredGraph& graph,
                   const std::function<void(const std::vector<BinPack>&, std::size_t)>& visit) {
  std::vector<BinPack> packs;
  auto rec = [&](auto&& self, std::size_t k, std::size_t layer, const LayerState& s, std::size_t cost) -> void {
    if (layer == graph.stage_bins(k).size()) {
      const auto next = graph.update(k, s);
      if (!next) return;
      if (k + 1 == graph.stage_count()) {
        visit(packs, cost);
      } else {
        self(self, k + 1, 0, *next, cost);
      }
      return;
    }
    for (const auto& t : graph.successors(k, layer, s)) {
      packs.push_back(t.pack);
      self(self, k, layer + 1, t.state, cost + t.cost);
      packs.pop_back();
    }
  };
  rec(rec, 0, 0, graph.initial_state(), 0);
}

bool layered_path_exists(const Instance& inst, const Rational& T, const Rational& eps, std::size_t state_cap) {
  require_uniform(inst);
  std::optional<UniformScale> scale;
  try {
    scale = make_uniform_scale(inst, T, eps);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoPath) return false;
    throw;
  }
  LayeredGraph graph(std::move(*scale), PriorPlacement{std::vector<std::optional<MachineIndex>>(inst.jobs())}, state_cap);
  auto rec = [&](auto&& self, std::size_t k, const LayerState& start) -> bool {
    const StageTable& table = graph.explore(k, start);
    for (const auto& node : table.last()) {
      const auto next = graph.update(k, node.state);
      if (!next) continue;
      if (k + 1 == graph.stage_count() || self(self, k + 1, *next)) return true;
    }
    return false;
  };
  return rec(rec, 0, graph.initial_state());
}

namespace {

Rational list_schedule_makespan(const Instance& inst) {
  const auto& p = inst.base_times();
  const auto& s = inst.speeds();
  std::vector<JobIndex> order(inst.jobs());
  std::iota(order.begin(), order.end(), JobIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](JobIndex a, JobIndex b) { return p[a] > p[b]; });
  std::vector<Rational> finish(inst.machines(), Rational(0));
  for (JobIndex j : order) {
    MachineIndex best = 0;
    for (MachineIndex i = 1; i < inst.machines(); ++i) {
      if (finish[i] + Rational(p[j]) / s[i] < finish[best] + Rational(p[j]) / s[best]) best = i;
    }
    finish[best] += Rational(p[j]) / s[best];
  }
  return *std::max_element(finish.begin(), finish.end());
}

}  // namespace

Rational uniform_ptas_target(const Instance& inst, const Rational& eps, TargetMode mode) {
  require_uniform(inst);
  if (inst.jobs() == 0) return Rational(0);
  if (mode == TargetMode::exact || (mode == TargetMode::automatic && inst.jobs() <= 10)) {
    return exact_makespan(inst).t_opt;
  }
  const auto& p = inst.base_times();
  const auto& s = inst.speeds();
  const Rational fastest = *std::max_element(s.begin(), s.end());
  const Rational total_speed = std::accumulate(s.begin(), s.end(), Rational(0));
  const Time total = std::accumulate(p.begin(), p.end(), Time{0});
  Rational lo = std::max(Rational(total) / total_speed, Rational(*std::max_element(p.begin(), p.end())) / fastest);
  Rational hi = list_schedule_makespan(inst);
  if (lo == 0) return Rational(0);
  while (hi > lo * (1 + eps)) {
    const Rational mid = (lo + hi) / 2;
    if (layered_path_exists(inst, mid, eps)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Rational internal_epsilon(const Rational& eps_target) {
  if (eps_target <= 0) fail(ErrorKind::InvalidInput, "epsilon must be positive");
  return Rational(1) / Rational(ceil_of(Rational(8) / eps_target));
}

Rational uniform_load_factor(const Rational& eps) {
  return (1 + 2 * eps + eps * eps) * (1 + eps + eps * eps * eps);
}

namespace {

struct SmallPhase {
  std::vector<MachineIndex> machine_of;
  std::vector<Rational> load;
  bool complete = true;
};

std::optional<MachineIndex> first_fit(const UniformScale& scale, const std::vector<Rational>& load,
                                      const std::vector<Rational>& usable, JobIndex j) {
  for (MachineIndex i : scale.bin_order) {
    if (scale.enormous_for(i, j) && load[i] < usable[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

UniformDecode decode_path(const LayeredGraph& graph, const Instance& inst, const std::vector<BinPack>& packs) {
  const UniformScale& scale = graph.scale();
  const PriorPlacement& prior = graph.prior();
  const std::size_t n = inst.jobs();
  const std::size_t m = inst.machines();
  std::vector<std::optional<MachineIndex>> machine_of(n);
  std::vector<Rational> load(m, Rational(0));
  auto place = [&](JobIndex j, MachineIndex i) {
    machine_of[j] = i;
    load[i] += scale.rounded(j);
  };

  struct Want {
    std::size_t interval;
    std::size_t cls;
    std::int64_t count;
    MachineIndex machine;
  };
  std::vector<Want> wants;
  for (const auto& pack : packs) {
    const auto k = static_cast<std::size_t>(pack.interval);
    for (std::size_t c = 0; c < pack.large.size(); ++c) {
      if (pack.large[c] > 0) wants.push_back({k, c, pack.large[c], pack.machine});
    }
    for (std::size_t c = 0; c < pack.medium.size(); ++c) {
      if (pack.medium[c] > 0) wants.push_back({k + 1, c, pack.medium[c], pack.machine});
    }
  }
  for (auto& w : wants) {
    for (JobIndex j : scale.classes[w.interval][w.cls].jobs) {
      if (w.count == 0) break;
      if (!machine_of[j] && prior.machine[j] == w.machine) {
        place(j, w.machine);
        --w.count;
      }
    }
  }
  for (auto& w : wants) {
    std::vector<JobIndex> candidates;
    for (JobIndex j : scale.classes[w.interval][w.cls].jobs) {
      if (!machine_of[j]) candidates.push_back(j);
    }
    std::stable_partition(candidates.begin(), candidates.end(), [&](JobIndex j) {
      return !(prior.machine[j] && scale.enormous_for(*prior.machine[j], j));
    });
    for (JobIndex j : candidates) {
      if (w.count == 0) break;
      place(j, w.machine);
      --w.count;
    }
    if (w.count != 0) fail(ErrorKind::InvalidInput, "pack asks for more pieces than remain");
  }

  std::vector<JobIndex> rest;
  for (JobIndex j = 0; j < n; ++j) {
    if (machine_of[j]) continue;
    if (!scale.interval[j]) {
      machine_of[j] = prior.machine[j].value_or(scale.bin_order.front());
    } else {
      rest.push_back(j);
    }
  }
  std::vector<Rational> usable(m);
  for (MachineIndex i = 0; i < m; ++i) {
    const Rational g = scale.grid(scale.bin_interval[i] + 4);
    usable[i] = load[i] + Rational(ceil_of((scale.capacity[i] - load[i]) / g)) * g;
  }
  auto decreasing = [&](std::vector<JobIndex> list) {
    std::stable_sort(list.begin(), list.end(), [&](JobIndex a, JobIndex b) { return scale.rounded(a) > scale.rounded(b); });
    return list;
  };

  // Old small pieces go home in increasing size until the bin first overflows; First-Fit for the rest.
  auto home_first = [&]() {
    SmallPhase phase{std::vector<MachineIndex>(n, 0), load, true};
    std::vector<bool> done(n, false);
    for (MachineIndex i = 0; i < m; ++i) {
      std::vector<JobIndex> own;
      for (JobIndex j : rest) {
        if (prior.machine[j] == i && scale.enormous_for(i, j)) own.push_back(j);
      }
      std::stable_sort(own.begin(), own.end(), [&](JobIndex a, JobIndex b) { return scale.rounded(a) < scale.rounded(b); });
      for (JobIndex j : own) {
        if (phase.load[i] > scale.capacity[i]) break;
        phase.machine_of[j] = i;
        phase.load[i] += scale.rounded(j);
        done[j] = true;
      }
    }
    for (JobIndex j : decreasing(rest)) {
      if (done[j]) continue;
      const auto bin = first_fit(scale, phase.load, usable, j);
      if (!bin) {
        phase.complete = false;
        return phase;
      }
      phase.machine_of[j] = *bin;
      phase.load[*bin] += scale.rounded(j);
    }
    return phase;
  };
  // Decreasing sizes, home bin preferred while it has usable slack.
  auto decreasing_fit = [&]() {
    SmallPhase phase{std::vector<MachineIndex>(n, 0), load, true};
    for (JobIndex j : decreasing(rest)) {
      std::optional<MachineIndex> bin;
      const auto home = prior.machine[j];
      if (home && scale.enormous_for(*home, j) && phase.load[*home] < usable[*home]) {
        bin = home;
      } else {
        bin = first_fit(scale, phase.load, usable, j);
      }
      if (!bin) fail(ErrorKind::RelaxedPackingFailed, "a small piece found no enormous bin with slack");
      phase.machine_of[j] = *bin;
      phase.load[*bin] += scale.rounded(j);
    }
    return phase;
  };

  auto finish = [&](const SmallPhase& phase) {
    std::vector<MachineIndex> full(n, 0);
    for (JobIndex j = 0; j < n; ++j) full[j] = machine_of[j] ? *machine_of[j] : phase.machine_of[j];
    for (MachineIndex i = 0; i < m; ++i) {
      const int k = scale.bin_interval[i];
      if (phase.load[i] > scale.capacity[i] + scale.grid(k + 4) + scale.grid(k + 2)) {
        fail(ErrorKind::RelaxedPackingFailed, "rounded bin load exceeds its relaxed capacity");
      }
    }
    UniformDecode d;
    d.assignment = Assignment(std::move(full));
    d.cost = transition_cost(prior, d.assignment);
    d.makespan = load_profile(inst, d.assignment).makespan;
    return d;
  };

  const SmallPhase first = home_first();
  UniformDecode best = finish(decreasing_fit());
  if (first.complete) {
    UniformDecode d = finish(first);
    if (std::tie(d.cost, d.makespan, d.assignment) <= std::tie(best.cost, best.makespan, best.assignment)) best = std::move(d);
  } else {
    best.fallback_used = true;
  }
  return best;
}

UniformReoptResult reoptimize_uniform(const ReoptInput& input, const Rational& eps_target,
                                      const UniformReoptOptions& options) {
  require_uniform(input.old_instance);
  require_uniform(input.new_instance);
  const Instance& inst = input.new_instance;
  const PriorPlacement prior = prior_placement(input);
  UniformReoptResult result;
  result.eps = internal_epsilon(eps_target);
  if (input.speed_ratio_bound) {
    const auto& s = inst.speeds();
    const auto [slow, fast] = std::minmax_element(s.begin(), s.end());
    if (*fast > *input.speed_ratio_bound * *slow) fail(ErrorKind::InvalidInput, "speed ratio exceeds the supplied bound");
  }
  if (inst.jobs() == 0) return result;
  result.T = uniform_ptas_target(inst, result.eps, options.target);
  if (result.T == 0) {
    std::vector<MachineIndex> machine_of(inst.jobs(), 0);
    for (JobIndex j = 0; j < inst.jobs(); ++j) machine_of[j] = prior.machine[j].value_or(0);
    result.assignment = Assignment(std::move(machine_of));
    result.cost = transition_cost(prior, result.assignment);
    return result;
  }

  LayeredGraph graph(make_uniform_scale(inst, result.T, result.eps), prior, options.state_cap);
  result.stages = graph.stage_count();
  std::vector<std::pair<const StageTable*, std::size_t>> chosen;
  bool found = false;
  auto evaluate = [&]() {
    if (++result.choices > options.choice_cap) {
      fail(ErrorKind::StateBudgetExceeded, "more than " + std::to_string(options.choice_cap) + " update-arc choices");
    }
    std::vector<BinPack> packs;
    for (const auto& [table, end] : chosen) {
      auto part = table->path_to(end);
      packs.insert(packs.end(), part.begin(), part.end());
    }
    UniformDecode d = decode_path(graph, inst, packs);
    if (d.fallback_used) ++result.fallbacks;
    if (found && std::tie(d.cost, d.makespan, d.assignment) >= std::tie(result.cost, result.makespan, result.assignment)) {
      return;
    }
    found = true;
    result.cost = d.cost;
    result.makespan = d.makespan;
    result.assignment = std::move(d.assignment);
  };
  auto rec = [&](auto&& self, std::size_t k, const LayerState& start) -> void {
    const StageTable& table = graph.explore(k, start);
    for (std::size_t e = 0; e < table.last().size(); ++e) {
      const auto next = graph.update(k, table.last()[e].state);
      if (!next) continue;
      chosen.emplace_back(&table, e);
      if (k + 1 == graph.stage_count()) {
        evaluate();
      } else {
        self(self, k + 1, *next);
      }
      chosen.pop_back();
    }
  };
  rec(rec, 0, graph.initial_state());
  if (!found) fail(ErrorKind::NoPath, "no initial-to-success path at the target");
  if (result.makespan > uniform_load_factor(result.eps) * result.T) {
    fail(ErrorKind::RelaxedPackingFailed, "final makespan exceeds the composed bound");
  }
  return result;
}

}  // namespace makespan
