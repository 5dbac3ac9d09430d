// Acceptance criteria, one line per criterion. Exit status is nonzero when any fails,
// except for failures listed as known gaps in the README; --strict counts those too.

#include "makespan/errors.hpp"
#include "makespan/feasible_scheduler.hpp"
#include "makespan/fpt.hpp"
#include "makespan/generators.hpp"
#include "makespan/graph_balancing.hpp"
#include "makespan/io.hpp"
#include "makespan/lp.hpp"
#include "makespan/oracle.hpp"
#include "makespan/reopt_identical.hpp"
#include "makespan/reopt_uniform.hpp"
#include "makespan/report.hpp"
#include "makespan/restricted.hpp"
#include "makespan/rounding.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace makespan;
using test::R;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  bool known_gap = false;
};

// Counts checks and keeps the first failure message.
class Tally {
 public:
  void check(bool condition, const std::string& what) {
    ++checks_;
    if (condition) return;
    ++violations_;
    if (first_.empty()) first_ = what;
  }

  bool clean() const { return violations_ == 0; }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << ", " << checks_ << " checks, " << violations_ << " violations";
    if (!first_.empty()) out << "; first: " << first_;
    return {violations_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t violations_ = 0;
  std::string first_;
};

std::string str(const Rational& r) { return to_string(r); }

Time max_assigned(const Instance& inst, const Assignment& a, MachineIndex i) {
  Time biggest = 0;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (a[j] == i) biggest = std::max(biggest, inst.time(i, j));
  }
  return biggest;
}

Outcome st_rounding() {
  Tally t;
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = test::random_unrelated(rng, 1 + rng.index(4), 1 + rng.index(8), 20, 25);
    const LpTLParams params = minimal_TL(inst);
    const Assignment a = round(inst, solve_feasibility(build_lp(inst, params)), params);
    const LoadProfile lp = load_profile(inst, a);
    t.check(lp.avg_load <= params.L, "avg load " + str(lp.avg_load) + " > L " + str(params.L));
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      const Rational bound(params.T + max_assigned(inst, a, i));
      t.check(lp.load[i] <= bound, "load " + str(lp.load[i]) + " > " + str(bound) + " at trial " + std::to_string(trial));
    }
  }
  return t.outcome("200 instances");
}

Outcome fully_feasible() {
  Tally t;
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.index(3);
    const std::size_t n = 1 + rng.index(7);
    const Instance inst = fully_feasible_planted(m, n, 12, m, 200 + trial);
    const OracleResult opt = exact_makespan(inst);
    t.check(test::phi_at(inst, opt.t_opt) == 1, "planted instance is not fully feasible");
    const Rational got = load_profile(inst, schedule_fully_feasible(inst)).makespan;
    const Rational bound = opt.t_opt + opt.l_opt;
    t.check(got <= bound, "makespan " + str(got) + " > T_opt+L_opt " + str(bound) + " at trial " + std::to_string(trial));
  }
  return t.outcome("100 instances");
}

Outcome feasibility_parameter() {
  Tally t;
  struct Shape {
    std::size_t m;
    std::size_t d;
  };
  const std::vector<Shape> shapes{{2, 1}, {3, 2}, {4, 3}};
  std::size_t accepted = 0;
  std::size_t drawn = 0;
  std::size_t looser_guard = 0;
  Rng rng(3);
  for (std::uint64_t seed = 0; accepted < 50 && drawn < 20000; ++seed) {
    const Shape s = shapes[seed % shapes.size()];
    const std::size_t n = 2 + rng.index(4);
    const Instance inst = fully_feasible_planted(s.m, n, 2 + static_cast<Time>(rng.index(15)), s.d, 3000 + seed);
    ++drawn;
    const OracleResult opt = exact_makespan(inst);
    const Rational phi = test::phi_at(inst, opt.t_opt);
    t.check(phi == R(static_cast<std::int64_t>(s.d), static_cast<std::int64_t>(s.m)), "planted phi " + str(phi));
    const FullyFeasibleTrace trace = schedule_fully_feasible_traced(inst);
    // Guard of the theorem: phi >= L / T with the algorithm's own T and L.
    if (phi * trace.params.T < trace.params.L) {
      looser_guard += phi * opt.t_opt >= opt.l_opt;
      continue;
    }
    ++accepted;
    const Rational got = load_profile(inst, trace.result).makespan;
    const Rational bound = opt.t_opt + opt.l_opt / phi;
    t.check(got <= bound, "makespan " + str(got) + " > " + str(bound) + " (seed " + std::to_string(3000 + seed) + ")");
  }
  t.check(accepted == 50, "only " + std::to_string(accepted) + " instances met the guard");
  return t.outcome(std::to_string(accepted) + " guarded instances of " + std::to_string(drawn) + " drawn (" +
                   std::to_string(looser_guard) + " rejected only by the algorithm's T)");
}

Outcome restricted_bound() {
  Tally t;
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.index(4);
    const Instance inst = restricted_random(m, 1 + rng.index(10), 9, 1 + rng.index(m), 400 + trial);
    const RestrictedRun run = schedule_restricted_traced(inst);
    const std::vector<Time> loads = integral_loads(inst, run.result);
    t.check(!partition_machines(loads, run.p_max, run.delta).any_over(), "M+ not empty");
    const Time bound = run.p_max + to_int64(floor_of(run.l_opt / run.phi));
    const Time got = *std::max_element(loads.begin(), loads.end());
    t.check(got <= bound, "makespan " + std::to_string(got) + " > " + std::to_string(bound));
    std::size_t support = 0;
    for (JobIndex j = 0; j < inst.jobs(); ++j) support += inst.feasible_count(j);
    t.check(run.pushes <= m * support, "pushes " + std::to_string(run.pushes) + " > m*S");
  }
  return t.outcome("200 instances");
}

Outcome fpt_scheme() {
  Tally t;
  const std::vector<Rational> eps{R(1, 4), R(1, 2), R(1)};
  Rng rng(5);
  std::size_t done = 0;
  std::size_t over_budget = 0;
  std::size_t largest_k = 0;
  while (done < 100) {
    const Instance inst = test::random_unrelated(rng, 1 + rng.index(3), 1 + rng.index(7), 15, 20);
    const Rational& e = eps[done % eps.size()];
    try {
      const Time T = minimal_T_for_scheme(inst, e, 8);
      const MilpOutcome out = solve_milp_scheme_traced(inst, e, T, 8);
      largest_k = std::max(largest_k, out.params.k());
      t.check(out.makespan <= (1 + e) * T, "makespan " + str(out.makespan) + " > (1+eps)T");
      const Rational t_opt = exact_makespan(inst).t_opt;
      t.check(Rational(T) <= t_opt, "T above T_opt");
      t.check(out.makespan <= (1 + e) * t_opt, "makespan " + str(out.makespan) + " > (1+eps)T_opt");
      ++done;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::ParameterBudgetExceeded) throw;
      ++over_budget;
    }
  }
  return t.outcome("100 instances, k <= " + std::to_string(largest_k) + ", " + std::to_string(over_budget) +
                   " redrawn for k > 8");
}

Outcome graph_balancing() {
  Tally t;
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t vertices = 2 + rng.index(6);
    const std::size_t loops = rng.index(3);
    const std::size_t edges = rng.index(11 - loops);
    const std::size_t window = trial % 2 == 0 ? 0 : 1 + rng.index(2);
    const GraphWithDecomposition gd = graph_balancing_random(vertices, edges, 9, loops, window, 600 + trial);
    t.check(validate_decomposition(gd.graph, gd.decomposition).ok(), "invalid generated decomposition");
    const BalanceResult r = balance(gd.graph, gd.decomposition);
    const Time exact = exact_orientation(gd.graph).makespan;
    t.check(r.makespan == exact, "dp " + std::to_string(r.makespan) + " != exact " + std::to_string(exact));
    t.check(max_in_degree(gd.graph, r.orientation) == r.makespan, "orientation disagrees with reported makespan");
  }
  return t.outcome("100 graphs");
}

PerturbationSpec scenario(Rng& rng, Kind kind, std::size_t max_jobs, std::uint64_t seed) {
  PerturbationSpec spec;
  spec.kind = kind;
  spec.machines = 1 + rng.index(3);
  spec.jobs = 1 + rng.index(max_jobs - 2);
  spec.p_max = 12;
  spec.add_jobs = rng.index(3);
  spec.remove_jobs = rng.index(std::min<std::size_t>(2, spec.jobs));
  spec.add_machines = spec.machines < 3 ? rng.index(2) : 0;
  spec.remove_machines = spec.machines > 1 && spec.add_machines == 0 ? rng.index(2) : 0;
  spec.seed = seed;
  return spec;
}

Outcome reopt_identical() {
  Tally t;
  const Rational eps = R(1, 2);
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    ReoptInput input;
    const bool identity = trial % 5 == 0;
    if (identity) {
      const Instance inst = Instance::identical(1 + rng.index(3), test::random_times(rng, 1 + rng.index(8), 12));
      input = identity_input(inst, exact_makespan(inst).witness);
    } else {
      input = reopt_perturbation(scenario(rng, Kind::identical, 8, 700 + trial));
    }
    const IdenticalReoptResult r = reoptimize_identical(input, eps);
    const ReoptOracleResult best = exact_reopt(input, R(1));
    t.check(r.makespan <= (1 + eps) * best.c_star, "makespan " + str(r.makespan) + " > (1+eps)C*");
    t.check(r.cost <= best.cost, "cost " + std::to_string(r.cost) + " > opt " + std::to_string(best.cost));
    t.check(r.cost == transition_cost(input, r.assignment), "cost differs from recount");
    if (identity) t.check(r.cost == 0, "identity cost " + std::to_string(r.cost));
  }
  return t.outcome("100 scenarios, 20 identity");
}

// The same scenario with identical machines in place of unit speeds.
ReoptInput as_identical(const ReoptInput& input) {
  ReoptInput out = input;
  out.old_instance = Instance::identical(input.old_instance.machines(), input.old_instance.base_times());
  out.new_instance = Instance::identical(input.new_instance.machines(), input.new_instance.base_times());
  out.speed_ratio_bound.reset();
  return out;
}

Outcome reopt_uniform() {
  Tally t;
  Tally agreement;
  Rng rng(8);
  std::size_t shared = 0;
  std::size_t fallback_runs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PerturbationSpec spec = scenario(rng, Kind::uniform, 6, 800 + trial);
    spec.jobs = std::min<std::size_t>(spec.jobs, 6 - spec.add_jobs);
    const bool unit = trial % 4 == 0;
    spec.ratio = unit ? R(1) : R(2);
    const ReoptInput input = reopt_perturbation(spec);
    const UniformReoptResult r = reoptimize_uniform(input, R(1, 2));
    fallback_runs += r.fallbacks > 0;
    const ReoptOracleResult best = exact_reopt(input, R(1));
    t.check(r.makespan <= R(3, 2) * best.c_star, "makespan " + str(r.makespan) + " > 1.5 C*");
    t.check(r.cost <= best.cost, "cost " + std::to_string(r.cost) + " > opt " + std::to_string(best.cost));
    t.check(r.cost == transition_cost(input, r.assignment), "cost differs from recount");
    if (unit) {
      ++shared;
      const IdenticalReoptResult id = reoptimize_identical(as_identical(input), R(1, 2));
      agreement.check(id.cost == r.cost, "b=1 cost " + std::to_string(r.cost) + " vs identical " + std::to_string(id.cost) +
                                     " (seed " + std::to_string(spec.seed) + ")");
    }
  }
  Outcome out = t.outcome("40 scenarios, " + std::to_string(fallback_runs) + " used the small-pack fallback");
  const Outcome agree = agreement.outcome(std::to_string(shared) + " shared with the identical scheme");
  out.detail += "; " + agree.detail;
  out.known_gap = out.ok && !agree.ok;
  out.ok = out.ok && agree.ok;
  return out;
}

Outcome lemma_suite() {
  Tally t;
  Rng rng(9);
  std::size_t hall_sets = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    const Instance inst = trial % 2 == 0 ? fully_feasible_planted(m, 2 + rng.index(6), 12, 1 + rng.index(m), 9000 + trial)
                                         : test::random_unrelated(rng, m, 2 + rng.index(6), 12, 30);
    const LpTLParams params = minimal_TL(inst);
    const Assignment sigma = round(inst, solve_feasibility(build_lp(inst, params)), params);
    const FeasibilityProfile profile = feasibility_profile(inst);
    const auto mm = static_cast<std::int64_t>(m);
    for (std::size_t k = 0; k < profile.thresholds.size(); ++k) {
      if (profile.phi[k] == 0) continue;
      const BalanceView view = balance_view(inst, sigma, params.T, params.L, profile, k);
      const Rational bad(static_cast<std::int64_t>(view.bad.size()));
      const Rational good(static_cast<std::int64_t>(view.good.size()));
      if (Rational(params.T) >= params.L) t.check(bad < Rational(mm) / (view.gamma + 1), "too many bad machines");
      if (params.L > 0) {
        t.check(good > (1 - 1 / view.gamma) * mm + bad / view.gamma * Rational(params.T) / params.L,
                "too few good machines");
      }
      if (profile.phi[k] * params.T >= params.L && view.bad.size() <= 8) {
        ++hall_sets;
        t.check(test::hall_holds(view), "Hall condition fails");
      }
    }
  }

  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng.index(4);
    const Instance inst = Instance::identical(m, test::random_times(rng, 1 + rng.index(10), 30));
    const Rational eps0 = R(1, 2 + static_cast<std::int64_t>(rng.index(6)));
    const Time T = ptas_target(inst, eps0, trial % 2 == 0 ? TargetMode::automatic : TargetMode::approximate);
    const ItemScale scale = make_item_scale(inst, T, eps0);
    const Rational sum = std::accumulate(scale.alpha.begin(), scale.alpha.end(), Rational(0));
    t.check(sum <= Rational(static_cast<std::int64_t>(m)), "sum of alpha " + str(sum) + " > m");
  }

  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng.index(5);
    const Rational eps0 = R(1, 2 + static_cast<std::int64_t>(rng.index(7)));
    std::vector<Rational> loads;
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      loads.push_back(R(rng.uniform(0, 24), 24));
      total += loads.back();
    }
    std::vector<Rational> items;
    while (true) {
      const Rational item = eps0 * R(rng.uniform(1, 12), 12);
      if (total + item > static_cast<std::int64_t>(m)) break;
      items.push_back(item);
      total += item;
    }
    std::sort(items.rbegin(), items.rend());
    t.check(relaxed_first_fit(loads, items, 1 + eps0).has_value(), "relaxed first fit left an item");
  }
  return t.outcome("500 + 500 + 500 configurations, " + std::to_string(hall_sets) + " Hall checks");
}

Outcome determinism() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    PerturbationSpec id;
    id.machines = 2;
    id.jobs = 5;
    id.add_jobs = 1;
    id.seed = seed;
    PerturbationSpec un = id;
    un.kind = Kind::uniform;
    un.ratio = R(2);
    const GraphWithDecomposition gd = graph_balancing_random(5, 7, 6, 1, 2, seed);
    Json graph;
    graph["graph"] = to_json(gd.graph);
    graph["decomposition"] = to_json(gd.decomposition);
    const std::vector<std::pair<Algorithm, std::function<Json()>>> cases{
        {Algorithm::a_um, [&] { return to_json(fully_feasible_planted(3, 6, 10, 2, seed)); }},
        {Algorithm::a_res, [&] { return to_json(restricted_random(3, 7, 9, 2, seed)); }},
        {Algorithm::fpt, [&] { return to_json(fully_feasible_planted(2, 5, 10, 2, seed)); }},
        {Algorithm::gb, [&] { return graph; }},
        {Algorithm::reopt_id, [&] { return to_json(reopt_perturbation(id)); }},
        {Algorithm::reopt_un, [&] { return to_json(reopt_perturbation(un)); }},
    };
    for (const auto& [algorithm, make] : cases) {
      const Json a = make();
      const Json b = make();
      t.check(dump(a) == dump(b), std::string(name(algorithm)) + " input differs between generations");
      const std::string first = dump(to_json(run_algorithm(algorithm, a, RunOptions{})));
      const std::string second = dump(to_json(run_algorithm(algorithm, b, RunOptions{})));
      t.check(first == second, std::string(name(algorithm)) + " report differs between runs");
    }
  }
  return t.outcome("6 algorithms x 3 seeds");
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
  const std::vector<Criterion> criteria{
      {1, "st-rounding bounds", 10, st_rounding},
      {2, "fully-feasible bound", 60, fully_feasible},
      {3, "feasibility-parameter bound", 60, feasibility_parameter},
      {4, "restricted bound", 10, restricted_bound},
      {5, "fpt scheme", 120, fpt_scheme},
      {6, "graph-balancing exactness", 30, graph_balancing},
      {7, "reopt identical", 120, reopt_identical},
      {8, "reopt uniform", 300, reopt_uniform},
      {9, "lemma suite", 30, lemma_suite},
      {10, "determinism", 0, determinism},
  };
  int failed = 0;
  int gaps = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.limit_seconds);
      if (seconds >= c.limit_seconds) {
        out.ok = false;
        out.detail += "; over the time limit";
      }
    }
    failed += !out.ok;
    gaps += out.known_gap;
    std::printf("[%s] %2d %s: %s (%s)%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), out.detail.c_str(), timing,
                out.known_gap ? " [known gap]" : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed, %d failing as known gaps\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), gaps);
  return failed == 0 || (!strict && failed == gaps) ? 0 : 1;
}
