#include "makespan/oracle.hpp"

#include "makespan/errors.hpp"

#include <algorithm>
#include <limits>

namespace makespan {

std::uint64_t assignment_space(std::size_t machines, std::size_t jobs, std::uint64_t cap) {
  std::uint64_t space = 1;
  for (std::size_t j = 0; j < jobs; ++j) {
    if (space > cap / std::max<std::uint64_t>(machines, 1)) return cap + 1;
    space *= machines;
  }
  return space;
}

bool oracle_within_cap(const Instance& inst, std::uint64_t cap) {
  return assignment_space(inst.machines(), inst.jobs(), cap) <= cap;
}

namespace {

void require_cap(const Instance& inst, std::uint64_t cap) {
  if (!oracle_within_cap(inst, cap)) {
    fail(ErrorKind::BudgetExceeded, std::to_string(inst.machines()) + "^" + std::to_string(inst.jobs()) +
                                        " assignments exceed the oracle cap");
  }
}

template <typename Load>
struct Table {
  std::size_t machines = 0;
  std::size_t jobs = 0;
  std::vector<std::optional<Load>> times;  // machine-major
  const std::optional<Load>& at(MachineIndex i, JobIndex j) const { return times[i * jobs + j]; }
};

template <typename Load>
Table<Load> table_of(const Instance& inst) {
  Table<Load> t{inst.machines(), inst.jobs(), {}};
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      if (!inst.feasible(i, j)) {
        t.times.emplace_back();
      } else if constexpr (std::is_same_v<Load, Time>) {
        t.times.emplace_back(inst.time(i, j));
      } else {
        t.times.emplace_back(inst.rational_time(i, j));
      }
    }
  }
  return t;
}

// Lexicographic minimum of (makespan, total load).
template <typename Load>
class MakespanSearch {
 public:
  explicit MakespanSearch(const Table<Load>& t) : t_(t), load_(t.machines, Load(0)), current_(t.jobs, 0) {
    min_rest_.assign(t.jobs + 1, Load(0));
    for (JobIndex j = t.jobs; j-- > 0;) {
      std::optional<Load> best;
      for (MachineIndex i = 0; i < t.machines; ++i) {
        if (t.at(i, j) && (!best || *t.at(i, j) < *best)) best = t.at(i, j);
      }
      min_rest_[j] = min_rest_[j + 1] + *best;
    }
  }

  void run() { descend(0, Load(0), Load(0)); }

  Load best_makespan;
  Load best_total;
  std::vector<MachineIndex> best_assignment;
  bool found = false;

 private:
  void descend(JobIndex j, Load running_max, Load total) {
    if (found) {
      if (running_max > best_makespan) return;
      if (running_max == best_makespan && total + min_rest_[j] >= best_total) return;
    }
    if (j == t_.jobs) {
      if (!found || running_max < best_makespan || total < best_total) {
        found = true;
        best_makespan = running_max;
        best_total = total;
        best_assignment = current_;
      }
      return;
    }
    for (MachineIndex i = 0; i < t_.machines; ++i) {
      const auto& p = t_.at(i, j);
      if (!p) continue;
      load_[i] += *p;
      current_[j] = i;
      descend(j + 1, std::max(running_max, load_[i]), total + *p);
      load_[i] -= *p;
    }
  }

  const Table<Load>& t_;
  std::vector<Load> load_;
  std::vector<MachineIndex> current_;
  std::vector<Load> min_rest_;
};

template <typename Load>
OracleResult exact_makespan_with(const Instance& inst) {
  const Table<Load> t = table_of<Load>(inst);
  MakespanSearch<Load> search(t);
  search.run();
  OracleResult result;
  result.t_opt = Rational(search.best_makespan);
  result.l_opt = Rational(search.best_total) / Rational(inst.machines());
  result.witness = Assignment(search.best_assignment);
  return result;
}

template <typename Load>
class ReoptSearch {
 public:
  ReoptSearch(const Table<Load>& t, const PriorPlacement& prior, std::optional<Load> bound)
      : t_(t), prior_(prior), bound_(std::move(bound)), load_(t.machines, Load(0)), current_(t.jobs, 0) {}

  void run() { descend(0, 0); }

  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  std::vector<MachineIndex> best_assignment;

 private:
  void descend(JobIndex j, std::size_t cost) {
    if (cost >= best_cost) return;
    if (j == t_.jobs) {
      best_cost = cost;
      best_assignment = current_;
      return;
    }
    // Try the prior machine first so cheap schedules tighten the bound early.
    std::vector<MachineIndex> order;
    if (prior_.machine[j]) order.push_back(*prior_.machine[j]);
    for (MachineIndex i = 0; i < t_.machines; ++i) {
      if (!prior_.machine[j] || i != *prior_.machine[j]) order.push_back(i);
    }
    for (MachineIndex i : order) {
      const auto& p = t_.at(i, j);
      if (!p) continue;
      load_[i] += *p;
      if (!bound_ || load_[i] <= *bound_) {
        current_[j] = i;
        const bool stays = prior_.machine[j] && *prior_.machine[j] == i;
        descend(j + 1, cost + (stays ? 0 : 1));
      }
      load_[i] -= *p;
    }
  }

  const Table<Load>& t_;
  const PriorPlacement& prior_;
  std::optional<Load> bound_;
  std::vector<Load> load_;
  std::vector<MachineIndex> current_;
};

template <typename Load>
ReoptOracleResult exact_reopt_with(const Instance& inst, const PriorPlacement& prior, const Rational& c_star,
                                   const std::optional<Rational>& ratio) {
  const Table<Load> t = table_of<Load>(inst);
  std::optional<Load> bound;
  if (ratio) {
    const Rational limit = *ratio * c_star;
    if constexpr (std::is_same_v<Load, Time>) {
      bound = to_int64(floor_of(limit));
    } else {
      bound = limit;
    }
  }
  ReoptSearch<Load> search(t, prior, bound);
  search.run();
  if (search.best_assignment.size() != inst.jobs()) fail(ErrorKind::Infeasible, "no schedule within the ratio");
  ReoptOracleResult result;
  result.cost = search.best_cost;
  result.c_star = c_star;
  result.witness = Assignment(search.best_assignment);
  return result;
}

}  // namespace

OracleResult exact_makespan(const Instance& inst, std::uint64_t cap) {
  require_cap(inst, cap);
  if (inst.jobs() == 0) return {Rational(0), Rational(0), Assignment()};
  if (inst.integral()) return exact_makespan_with<Time>(inst);
  return exact_makespan_with<Rational>(inst);
}

ReoptOracleResult exact_reopt(const ReoptInput& input, const std::optional<Rational>& ratio, std::uint64_t cap) {
  const Instance& inst = input.new_instance;
  const PriorPlacement prior = prior_placement(input);
  const Rational c_star = exact_makespan(inst, cap).t_opt;
  if (inst.jobs() == 0) return {0, c_star, Assignment()};
  if (inst.integral()) return exact_reopt_with<Time>(inst, prior, c_star, ratio);
  return exact_reopt_with<Rational>(inst, prior, c_star, ratio);
}

OrientationOracleResult exact_orientation(const GraphBalancingInstance& g, std::size_t max_edges) {
  std::vector<std::size_t> free_edges;
  std::vector<Time> base(g.vertices(), 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.edges()[e].loop()) {
      base[g.edges()[e].u] += g.edges()[e].weight;
    } else {
      free_edges.push_back(e);
    }
  }
  if (free_edges.size() > max_edges) fail(ErrorKind::BudgetExceeded, "too many edges for exhaustive orientation");
  OrientationOracleResult best;
  bool found = false;
  std::vector<Time> load;
  const std::uint64_t total = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    load = base;
    for (std::size_t k = 0; k < free_edges.size(); ++k) {
      const auto& edge = g.edges()[free_edges[k]];
      load[((mask >> k) & 1u) ? edge.u : edge.v] += edge.weight;
    }
    const Time value = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
    if (!found || value < best.makespan) {
      found = true;
      best.makespan = value;
      best.witness.head.assign(g.edges().size(), 0);
      for (std::size_t e = 0; e < g.edges().size(); ++e) best.witness.head[e] = g.edges()[e].u;
      for (std::size_t k = 0; k < free_edges.size(); ++k) {
        const auto& edge = g.edges()[free_edges[k]];
        best.witness.head[free_edges[k]] = ((mask >> k) & 1u) ? edge.u : edge.v;
      }
    }
  }
  return best;
}

}  // namespace makespan
