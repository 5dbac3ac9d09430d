#include "makespan/errors.hpp"
#include "makespan/generators.hpp"
#include "makespan/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace makespan;
using test::INF;
using test::R;

TEST_CASE("exact makespan examples") {
  const OracleResult one = exact_makespan(Instance::identical(1, {2, 3}));
  CHECK(one.t_opt == 5);
  CHECK(one.l_opt == 5);

  const OracleResult two = exact_makespan(Instance::identical(2, {3, 3, 2}));
  CHECK(two.t_opt == 5);
  CHECK(two.l_opt == 4);
  CHECK(load_profile(Instance::identical(2, {3, 3, 2}), two.witness).makespan == 5);

  const OracleResult diag = exact_makespan(Instance::unrelated({{1, INF}, {INF, 1}}));
  CHECK(diag.t_opt == 1);
  CHECK(diag.l_opt == 1);

  // Among makespan-optimal schedules the cheaper total is preferred.
  const OracleResult pick = exact_makespan(Instance::unrelated({{2, 2}, {2, 1}}));
  CHECK(pick.t_opt == 2);
  CHECK(pick.l_opt == R(3, 2));

  const Instance uni = Instance::uniform({3, 3}, {R(2), R(1)});
  CHECK(exact_makespan(uni).t_opt == 3);

  CHECK(assignment_space(3, 4) == 81);
  CHECK(oracle_within_cap(Instance::identical(2, {1, 1, 1}), 8));
  CHECK_FALSE(oracle_within_cap(Instance::identical(2, {1, 1, 1, 1}), 8));
  try {
    exact_makespan(Instance::identical(2, {1, 1, 1, 1}), 8);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("exact makespan is invariant under relabelling") {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.index(3);
    const std::size_t n = 1 + rng.index(6);
    const Instance inst = test::random_unrelated(rng, m, n, 9, 20);
    const OracleResult base = exact_makespan(inst);
    CHECK(load_profile(inst, base.witness).makespan == base.t_opt);
    CHECK(load_profile(inst, base.witness).avg_load == base.l_opt);

    std::vector<std::size_t> rows(m), cols(n);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    for (std::size_t k = m; k > 1; --k) std::swap(rows[k - 1], rows[rng.index(k)]);
    for (std::size_t k = n; k > 1; --k) std::swap(cols[k - 1], cols[rng.index(k)]);
    TimeMatrix shuffled(m, std::vector<Entry>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) shuffled[i][j] = inst.entry(rows[i], cols[j]);
    }
    const OracleResult moved = exact_makespan(Instance::unrelated(shuffled));
    CHECK(moved.t_opt == base.t_opt);
    CHECK(moved.l_opt == base.l_opt);
  }
}

TEST_CASE("exact reopt examples") {
  const Instance inst = Instance::identical(2, {3, 3, 2, 2});
  const OracleResult opt = exact_makespan(inst);
  const ReoptInput same = identity_input(inst, opt.witness);
  CHECK(exact_reopt(same, R(1)).cost == 0);
  CHECK(exact_reopt(same, R(1)).c_star == 5);

  ReoptInput fresh;
  fresh.old_instance = Instance::identical(2, {});
  fresh.new_instance = inst;
  fresh.job_ids_new = {0, 1, 2, 3};
  CHECK(exact_reopt(fresh, R(1)).cost == 4);
  CHECK(exact_reopt(fresh, std::nullopt).cost == 4);

  // Machine 1 disappears; its two jobs must move.
  ReoptInput shrink;
  shrink.old_instance = inst;
  shrink.new_instance = Instance::identical(1, {3, 3, 2, 2});
  shrink.sigma0 = Assignment({0, 1, 0, 1});
  shrink.job_ids_old = {0, 1, 2, 3};
  shrink.job_ids_new = {0, 1, 2, 3};
  shrink.machine_ids_old = {0, 1};
  shrink.machine_ids_new = {0};
  const ReoptOracleResult r = exact_reopt(shrink, R(1));
  CHECK(r.cost == 2);
  CHECK(r.c_star == 10);

  // Without a makespan bound nothing needs to move.
  ReoptInput lopsided = identity_input(inst, Assignment({0, 0, 0, 0}));
  CHECK(exact_reopt(lopsided, std::nullopt).cost == 0);
  CHECK(exact_reopt(lopsided, R(1)).cost == 2);
  CHECK(exact_reopt(lopsided, R(2)).cost == 0);
}

TEST_CASE("exact reopt monotone in the ratio") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    PerturbationSpec spec;
    spec.machines = 1 + seed % 3;
    spec.jobs = 2 + seed % 5;
    spec.add_jobs = seed % 2;
    spec.remove_jobs = seed % 3 == 0 ? 1 : 0;
    spec.seed = 300 + seed;
    const ReoptInput input = reopt_perturbation(spec);
    const ReoptOracleResult tight = exact_reopt(input, R(1));
    const ReoptOracleResult loose = exact_reopt(input, R(3, 2));
    const ReoptOracleResult free = exact_reopt(input, std::nullopt);
    CHECK(loose.cost <= tight.cost);
    CHECK(free.cost <= loose.cost);
    CHECK(transition_cost(input, tight.witness) == tight.cost);
    CHECK(load_profile(input.new_instance, tight.witness).makespan == tight.c_star);
    CHECK(tight.c_star == exact_makespan(input.new_instance).t_opt);
  }
}

TEST_CASE("exact orientation examples") {
  CHECK(exact_orientation(GraphBalancingInstance(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).makespan == 1);
  CHECK(exact_orientation(GraphBalancingInstance(2, {{0, 1, 7}})).makespan == 7);
  const GraphBalancingInstance star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const OrientationOracleResult s = exact_orientation(star);
  CHECK(s.makespan == 1);
  CHECK(in_degrees(star, s.witness)[0] <= 1);
  CHECK(exact_orientation(GraphBalancingInstance(2, {{0, 0, 4}, {0, 1, 3}})).makespan == 4);
  CHECK(exact_orientation(GraphBalancingInstance(2, {})).makespan == 0);
}
