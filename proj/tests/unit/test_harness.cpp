#include "makespan/errors.hpp"
#include "makespan/generators.hpp"
#include "makespan/io.hpp"
#include "makespan/oracle.hpp"
#include "makespan/report.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace makespan;
using test::R;

namespace {

Json graph_input(const GraphWithDecomposition& gd) {
  Json j;
  j["graph"] = to_json(gd.graph);
  j["decomposition"] = to_json(gd.decomposition);
  return j;
}

std::vector<std::pair<Algorithm, Json>> sample_inputs(std::uint64_t seed) {
  PerturbationSpec id;
  id.machines = 2;
  id.jobs = 4;
  id.add_jobs = 1;
  id.seed = seed;
  PerturbationSpec un = id;
  un.kind = Kind::uniform;
  un.ratio = R(2);
  return {
      {Algorithm::a_um, to_json(fully_feasible_planted(3, 5, 10, 3, seed))},
      {Algorithm::a_res, to_json(restricted_random(3, 6, 8, 2, seed))},
      {Algorithm::fpt, to_json(fully_feasible_planted(2, 5, 10, 2, seed))},
      {Algorithm::gb, graph_input(graph_balancing_random(4, 6, 5, 1, 2, seed))},
      {Algorithm::reopt_id, to_json(reopt_perturbation(id))},
      {Algorithm::reopt_un, to_json(reopt_perturbation(un))},
  };
}

bool has_verdict(const RunReport& r, const std::string& name) {
  return std::any_of(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) { return v.name == name; });
}

}  // namespace

TEST_CASE("digest") {
  const Json a = Json::parse(R"({"kind":"identical","m":2,"p":[1,2]})");
  const Json b = Json::parse(R"({"kind":"identical","m":2,"p":[2,1]})");
  CHECK(digest(a) == digest(a));
  CHECK(digest(a) != digest(b));
  CHECK(digest(a).size() == 16);
  CHECK(std::all_of(digest(a).begin(), digest(a).end(), [](char c) { return std::isxdigit(c) && !std::isupper(c); }));
  // FNV-1a of the empty object dump "{}".
  CHECK(digest(Json::object()) == "08f44b07b5901a25");
}

TEST_CASE("generators are deterministic and planted") {
  CHECK(fully_feasible_planted(3, 6, 10, 3, 1) == fully_feasible_planted(3, 6, 10, 3, 1));
  CHECK(dump(to_json(fully_feasible_planted(3, 6, 10, 3, 1))) == dump(to_json(fully_feasible_planted(3, 6, 10, 3, 1))));
  CHECK_FALSE(fully_feasible_planted(3, 6, 10, 3, 1) == fully_feasible_planted(3, 6, 10, 3, 2));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t m = 2 + seed % 3;
    const std::size_t d = 1 + seed % m;
    const Instance planted = fully_feasible_planted(m, 5, 10, d, seed);
    const Rational t_opt = exact_makespan(planted).t_opt;
    for (JobIndex j = 0; j < planted.jobs(); ++j) {
      std::size_t within = 0;
      for (MachineIndex i = 0; i < m; ++i) within += Rational(planted.time(i, j)) <= t_opt;
      CHECK(within >= d);
      if (j == 0) CHECK(within == d);
    }

    const Instance full = restricted_random(m, 6, 9, m, seed);
    for (JobIndex j = 0; j < full.jobs(); ++j) CHECK(full.feasible_count(j) == m);
    CHECK(restricted_phi(full) == 1);
    const Instance part = restricted_random(m, 6, 9, d, seed);
    CHECK(restricted_phi(part) == R(static_cast<std::int64_t>(d), static_cast<std::int64_t>(m)));

    const Instance uni = uniform_bounded_ratio(m, 4, 9, R(2), 4, seed);
    const auto [lo, hi] = std::minmax_element(uni.speeds().begin(), uni.speeds().end());
    CHECK(*hi / *lo <= 2);

    const GraphWithDecomposition gd = graph_balancing_random(5, 7, 4, 2, seed % 3, seed);
    CHECK(gd.graph.edges().size() == 9);
    CHECK(validate_decomposition(gd.graph, gd.decomposition).ok());
  }
}

TEST_CASE("perturbations keep job identities") {
  PerturbationSpec spec;
  spec.machines = 2;
  spec.jobs = 5;
  spec.add_jobs = 2;
  spec.seed = 11;
  const ReoptInput input = reopt_perturbation(spec);
  CHECK(input.old_instance.jobs() == 5);
  CHECK(input.new_instance.jobs() == 7);
  for (JobId id : input.job_ids_old) {
    CHECK(std::find(input.job_ids_new.begin(), input.job_ids_new.end(), id) != input.job_ids_new.end());
  }
  CHECK(std::set<JobId>(input.job_ids_new.begin(), input.job_ids_new.end()).size() == 7);
  CHECK(reopt_perturbation(spec) == input);
  CHECK(reopt_from_json(to_json(input)) == input);

  spec.add_jobs = 0;
  spec.remove_jobs = 2;
  spec.add_machines = 1;
  const ReoptInput other = reopt_perturbation(spec);
  CHECK(other.new_instance.jobs() == 3);
  CHECK(other.new_instance.machines() == 3);
  CHECK(transition_cost(other, exact_reopt(other, std::nullopt).witness) == 0);
}

TEST_CASE("run reports pass and rerun byte-identically") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    for (const auto& [algorithm, input] : sample_inputs(seed)) {
      CAPTURE(name(algorithm));
      const RunOptions options;
      const RunReport first = run_algorithm(algorithm, input, options);
      const RunReport again = run_algorithm(algorithm, input, options);
      CHECK(first.pass());
      CHECK(first.digest == digest(input));
      CHECK(dump(to_json(first)) == dump(to_json(again)));
      CHECK_FALSE(first.wall_ms.has_value());

      const RunReport checked = verify_solution(algorithm, input, first.solution, options);
      CHECK(checked.pass());
      CHECK(checked.makespan == first.makespan);
      CHECK(checked.cost == first.cost);
    }
  }
}

TEST_CASE("report verdicts") {
  const Json planted = to_json(fully_feasible_planted(3, 5, 10, 3, 5));
  const RunReport um = run_algorithm(Algorithm::a_um, planted, RunOptions{});
  CHECK(has_verdict(um, "T_opt+L_opt/phi"));
  RunOptions no_oracle;
  no_oracle.oracle = OracleMode::off;
  CHECK_FALSE(has_verdict(run_algorithm(Algorithm::a_um, planted, no_oracle), "T_opt+L_opt/phi"));

  const RunReport res = run_algorithm(Algorithm::a_res, to_json(restricted_random(3, 6, 8, 2, 5)), RunOptions{});
  CHECK(has_verdict(res, "p_max+floor(L_opt/phi)"));

  const Instance inst = Instance::identical(2, {4, 3, 3, 2});
  const Json same = to_json(identity_input(inst, exact_makespan(inst).witness));
  const RunReport id = run_algorithm(Algorithm::reopt_id, same, RunOptions{});
  CHECK(id.cost == std::optional<std::size_t>{0});
  CHECK(id.pass());

  // A schedule that stacks everything on one machine breaks the (1+eps) bound.
  const RunReport bad = verify_solution(Algorithm::reopt_id, same, to_json(Assignment({0, 0, 0, 0})), RunOptions{});
  CHECK_FALSE(bad.pass());

  const Json restricted = to_json(Instance::restricted({{2, test::INF}, {2, 3}}));
  const RunReport infeasible = verify_solution(Algorithm::a_res, restricted, to_json(Assignment({0, 0})), RunOptions{});
  CHECK_FALSE(infeasible.pass());

  const std::string text = table({um, res, id});
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("a_res") != std::string::npos);
}

TEST_CASE("names and parse errors") {
  for (const Algorithm a : {Algorithm::a_um, Algorithm::a_res, Algorithm::fpt, Algorithm::gb, Algorithm::reopt_id,
                            Algorithm::reopt_un}) {
    CHECK(parse_algorithm(name(a)) == a);
  }
  CHECK(parse_oracle_mode("auto") == OracleMode::automatic);
  CHECK(parse_oracle_mode("on") == OracleMode::on);
  CHECK(parse_oracle_mode("off") == OracleMode::off);
  CHECK_THROWS_AS(parse_algorithm("simplex"), Error);
  CHECK_THROWS_AS(parse_oracle_mode("sometimes"), Error);
  CHECK_THROWS_AS(run_algorithm(Algorithm::a_res, to_json(Instance::unrelated({{1, 2}, {3, 4}})), RunOptions{}), Error);
}
