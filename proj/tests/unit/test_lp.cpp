#include "makespan/errors.hpp"
#include "makespan/lp.hpp"
#include "makespan/oracle.hpp"
#include "makespan/simplex.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace makespan;
using test::INF;
using test::R;

namespace {

LinearRow row(std::vector<std::pair<std::size_t, Rational>> terms, Sense sense, Rational rhs) {
  return {std::move(terms), sense, std::move(rhs)};
}

// Indicator of an assignment over the LP's variables.
std::vector<Rational> indicator(const LpProblem& lp, const Assignment& a) {
  std::vector<Rational> x;
  for (const auto& v : lp.variables) x.push_back(a[v.job] == v.machine ? 1 : 0);
  return x;
}

bool indicator_covers(const LpProblem& lp, const Assignment& a) {
  for (JobIndex j = 0; j < a.size(); ++j) {
    bool found = false;
    for (const auto& v : lp.variables) found = found || (v.job == j && v.machine == a[j]);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simplex examples") {
  LinearProgram eq{1, {row({{0, R(1)}}, Sense::eq, R(1))}};
  const LinearSolution a = find_feasible_point(eq);
  REQUIRE(a.status == LpStatus::Feasible);
  CHECK(a.values[0] == 1);

  LinearProgram clash{1, {row({{0, R(1)}}, Sense::le, R(0)), row({{0, R(1)}}, Sense::eq, R(1))}};
  CHECK(find_feasible_point(clash).status == LpStatus::Infeasible);

  LinearProgram mixed{3,
                      {row({{0, R(1)}, {1, R(1)}, {2, R(1)}}, Sense::eq, R(1)),
                       row({{0, R(3)}, {1, R(-1)}}, Sense::ge, R(1, 2)),
                       row({{2, R(2)}}, Sense::le, R(1, 3))}};
  const LinearSolution m = find_feasible_point(mixed);
  REQUIRE(m.status == LpStatus::Feasible);
  CHECK(satisfies(mixed, m.values));

  LinearProgram negative_rhs{2, {row({{0, R(-1)}, {1, R(-1)}}, Sense::le, R(-3)), row({{0, R(1)}}, Sense::le, R(1))}};
  const LinearSolution n = find_feasible_point(negative_rhs);
  REQUIRE(n.status == LpStatus::Feasible);
  CHECK(satisfies(negative_rhs, n.values));
}

TEST_CASE("simplex bit bound") {
  LinearProgram lp{2, {row({{0, R(1, 1'000'003)}, {1, R(1'000'033)}}, Sense::eq, R(7, 999'983))}};
  SimplexOptions tiny;
  tiny.max_bits = 8;
  try {
    find_feasible_point(lp, tiny);
    FAIL("expected NumericOverflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NumericOverflow);
  }
  CHECK(find_feasible_point(lp).status == LpStatus::Feasible);
}

TEST_CASE("simplex agrees with brute force on tiny programs") {
  // Vertex enumeration over {0, 1/2, 1, 2}^2 decides feasibility of 2-variable systems with these coefficients.
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp{2, {}};
    const int rows = 1 + static_cast<int>(rng.index(3));
    for (int r = 0; r < rows; ++r) {
      const Sense sense = static_cast<Sense>(rng.index(3));
      lp.rows.push_back(row({{0, R(rng.uniform(-2, 2))}, {1, R(rng.uniform(-2, 2))}}, sense, R(rng.uniform(-2, 2))));
    }
    const LinearSolution s = find_feasible_point(lp);
    if (s.status == LpStatus::Feasible) {
      CHECK(satisfies(lp, s.values));
    } else {
      const std::vector<Rational> grid{R(0), R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(1), R(3, 2), R(2), R(3)};
      for (const auto& x : grid) {
        for (const auto& y : grid) CHECK_FALSE(satisfies(lp, {x, y}));
      }
    }
  }
}

TEST_CASE("build_lp examples") {
  const Instance single = Instance::unrelated({{3}});
  const LpProblem a = build_lp(single, {3, R(3)});
  CHECK(a.variables.size() == 1);
  const LpSolution sa = solve_feasibility(a);
  REQUIRE(sa.status == LpStatus::Feasible);
  CHECK(sa.x.at(0, 0) == 1);

  const LpProblem b = build_lp(single, {2, R(3)});
  CHECK(b.variables.empty());
  CHECK(solve_feasibility(b).status == LpStatus::Infeasible);

  const Instance two = Instance::identical(2, {1, 1});
  const LpProblem c = build_lp(two, {1, R(1)});
  CHECK(satisfies(c.program, indicator(c, Assignment({0, 1}))));
  CHECK(solve_feasibility(c).status == LpStatus::Feasible);

  const Instance u = Instance::unrelated({{1, 2, 3}, {3, 2, 1}});
  const LpProblem d = build_lp(u, {3, R(2)});
  CHECK(satisfies(d.program, indicator(d, Assignment({0, 1, 1}))));
  const LpSolution sd = solve_feasibility(d);
  REQUIRE(sd.status == LpStatus::Feasible);
  CHECK(satisfies(d.program, [&] {
    std::vector<Rational> x;
    for (const auto& v : d.variables) x.push_back(sd.x.at(v.machine, v.job));
    return x;
  }()));
}

TEST_CASE("minimal_TL examples") {
  LpTLParams a = minimal_TL(Instance::unrelated({{2, 3}}));
  CHECK(a.T == 5);
  CHECK(a.L == 5);
  LpTLParams b = minimal_TL(Instance::identical(2, {2, 2}));
  CHECK(b.T == 2);
  CHECK(b.L == 2);
  LpTLParams c = minimal_TL(Instance::unrelated({{1, INF}, {INF, 1}}));
  CHECK(c.T == 1);
  CHECK(c.L == 1);
  CHECK(lower_time_bound(Instance::unrelated({{1, 2, 3}, {3, 2, 1}})) == 2);
  CHECK(upper_time_bound(Instance::unrelated({{1, 2, 3}, {3, 2, 1}})) == 12);
}

TEST_CASE("minimal_TL can undercut L_opt when T is below T_opt") {
  // Four unit-like jobs on two machines: LP(5, 5) is feasible while T_opt = 6 and L_opt = 9/2.
  const Instance inst = Instance::unrelated({{2, 2, 2, 2}, {3, 3, 3, 3}});
  const OracleResult opt = exact_makespan(inst);
  CHECK(opt.t_opt == 6);
  CHECK(opt.l_opt == R(9, 2));
  const LpTLParams tl = minimal_TL(inst);
  CHECK(tl.T == 5);
  CHECK(tl.L == 5);
  CHECK(tl.L > opt.l_opt);
}

TEST_CASE("LP properties over random instances") {
  Rng rng(17);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + rng.index(3);
    const std::size_t n = 1 + rng.index(12 / m);
    const Instance inst = test::random_unrelated(rng, m, n, 9, 25);
    const LpTLParams tl = minimal_TL(inst);
    const OracleResult opt = exact_makespan(inst);
    CHECK(Rational(tl.T) <= opt.t_opt);
    CHECK(tl.L <= Rational(tl.T));
    if (Rational(tl.T) == opt.t_opt) {
      CHECK(tl.L <= opt.l_opt);
      ++compared;
    }
    CHECK(lp_feasible(inst, tl));
    if (tl.T > lower_time_bound(inst)) CHECK_FALSE(lp_feasible(inst, {tl.T - 1, Rational(tl.T - 1)}));
    const Rational step = R(1, static_cast<std::int64_t>(m));
    if (tl.L >= step) CHECK_FALSE(lp_feasible(inst, {tl.T, tl.L - step}));

    // Monotone in both parameters.
    CHECK(lp_feasible(inst, {tl.T + 1, tl.L}));
    CHECK(lp_feasible(inst, {tl.T, tl.L + 1}));

    // The optimal witness is feasible for LP(T_opt, L_opt).
    const LpTLParams at_opt{to_int64(numerator(opt.t_opt)), opt.l_opt};
    const LpProblem lp = build_lp(inst, at_opt);
    REQUIRE(indicator_covers(lp, opt.witness));
    CHECK(satisfies(lp.program, indicator(lp, opt.witness)));
  }
  CHECK(compared > 40);
}
