#include "makespan/report.hpp"

#include "makespan/errors.hpp"
#include "makespan/feasible_scheduler.hpp"
#include "makespan/fpt.hpp"
#include "makespan/graph_balancing.hpp"
#include "makespan/lp.hpp"
#include "makespan/oracle.hpp"
#include "makespan/reopt_identical.hpp"
#include "makespan/reopt_uniform.hpp"
#include "makespan/restricted.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace makespan {

namespace {

constexpr std::array<std::string_view, 6> kAlgorithmNames{"a_um", "a_res", "fpt", "gb", "reopt_id", "reopt_un"};

Verdict at_most(std::string name, Rational value, Rational bound) {
  const bool pass = value <= bound;
  return {std::move(name), std::move(value), std::move(bound), false, pass};
}

Verdict equal(std::string name, Rational value, Rational bound) {
  const bool pass = value == bound;
  return {std::move(name), std::move(value), std::move(bound), true, pass};
}

bool use_oracle(OracleMode mode, bool affordable) {
  return mode == OracleMode::on || (mode == OracleMode::automatic && affordable);
}

// Fraction of machines where the job runs within T, minimised over jobs.
Rational phi_at(const Instance& inst, const Rational& T) {
  Rational phi = 1;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    std::size_t count = 0;
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      if (inst.feasible(i, j) && inst.rational_time(i, j) <= T) ++count;
    }
    phi = std::min(phi, make_rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(inst.machines())));
  }
  return phi;
}

// Loads and validity of an assignment, recorded on the report.
bool record_schedule(const Instance& inst, const Assignment& a, RunReport& report) {
  report.solution = to_json(a);
  try {
    check_assignment(inst, a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InfeasiblePairAssigned && e.kind() != ErrorKind::InvalidInput) throw;
    report.verdicts.push_back(equal("feasible", 0, 1));
    return false;
  }
  report.verdicts.push_back(equal("feasible", 1, 1));
  report.makespan = load_profile(inst, a).makespan;
  return true;
}

void evaluate_unrelated(Algorithm algorithm, const Instance& inst, const Assignment& a, const RunOptions& options,
                        RunReport& report) {
  if (!record_schedule(inst, a, report)) return;
  const bool oracle = use_oracle(options.oracle, oracle_within_cap(inst));
  switch (algorithm) {
    case Algorithm::a_um: {
      const LpTLParams lp = minimal_TL(inst);
      report.values.emplace_back("lp_T", Rational(lp.T));
      report.values.emplace_back("lp_L", lp.L);
      if (!oracle) return;
      const OracleResult r = exact_makespan(inst);
      const Rational phi = phi_at(inst, r.t_opt);
      report.values.emplace_back("T_opt", r.t_opt);
      report.values.emplace_back("L_opt", r.l_opt);
      report.values.emplace_back("phi", phi);
      if (phi * lp.T >= lp.L) {
        report.verdicts.push_back(at_most("T_opt+L_opt/phi", report.makespan, r.t_opt + r.l_opt / phi));
      }
      return;
    }
    case Algorithm::a_res: {
      const auto& p = inst.base_times();
      const Time total = std::accumulate(p.begin(), p.end(), Time{0});
      const Time p_max = *std::max_element(p.begin(), p.end());
      const Rational phi = restricted_phi(inst);
      const Rational l_opt = make_rational(total, static_cast<std::int64_t>(inst.machines()));
      report.values.emplace_back("p_max", Rational(p_max));
      report.values.emplace_back("L_opt", l_opt);
      report.values.emplace_back("phi", phi);
      report.verdicts.push_back(at_most("p_max+floor(L_opt/phi)", report.makespan,
                                        Rational(p_max) + Rational(floor_of(l_opt / phi))));
      if (oracle) report.values.emplace_back("T_opt", exact_makespan(inst).t_opt);
      return;
    }
    case Algorithm::fpt: {
      const Time T = minimal_T_for_scheme(inst, options.eps, options.k_cap);
      report.values.emplace_back("T", Rational(T));
      report.verdicts.push_back(at_most("(1+eps)T", report.makespan, (1 + options.eps) * Rational(T)));
      if (!oracle) return;
      const Rational t_opt = exact_makespan(inst).t_opt;
      report.values.emplace_back("T_opt", t_opt);
      report.verdicts.push_back(at_most("(1+eps)T_opt", report.makespan, (1 + options.eps) * t_opt));
      return;
    }
    default:
      fail(ErrorKind::InvalidInput, "not a single-instance scheduling algorithm");
  }
}

ReoptInput reopt_input(const Json& input, const RunOptions& options) {
  ReoptInput r = reopt_from_json(input);
  if (options.speed_ratio) r.speed_ratio_bound = options.speed_ratio;
  return r;
}

void evaluate_reopt(Algorithm algorithm, const ReoptInput& input, const Assignment& a, const RunOptions& options,
                    RunReport& report) {
  const Instance& inst = input.new_instance;
  if (!record_schedule(inst, a, report)) return;
  const std::size_t recount = transition_cost(input, a);
  report.values.emplace_back("cost_recount", Rational(static_cast<std::int64_t>(recount)));
  if (report.cost) {
    report.verdicts.push_back(equal("cost=recount", Rational(static_cast<std::int64_t>(*report.cost)),
                                    Rational(static_cast<std::int64_t>(recount))));
  } else {
    report.cost = recount;
  }
  if (inst.jobs() > 0) {
    if (algorithm == Algorithm::reopt_id) {
      const Rational eps0 = options.eps / 4;
      const Time T = ptas_target(inst, eps0);
      report.values.emplace_back("T", Rational(T));
      report.verdicts.push_back(at_most("(1+eps/4)T", report.makespan, (1 + eps0) * Rational(T)));
    } else {
      const Rational eps = internal_epsilon(options.eps);
      const Rational T = uniform_ptas_target(inst, eps);
      report.values.emplace_back("T", T);
      report.values.emplace_back("eps_internal", eps);
      report.verdicts.push_back(at_most("composed(eps)T", report.makespan, uniform_load_factor(eps) * T));
    }
  }
  if (!use_oracle(options.oracle, oracle_within_cap(inst))) return;
  const ReoptOracleResult best = exact_reopt(input, Rational(1));
  report.values.emplace_back("C*", best.c_star);
  report.values.emplace_back("opt_cost", Rational(static_cast<std::int64_t>(best.cost)));
  report.verdicts.push_back(at_most("(1+eps)C*", report.makespan, (1 + options.eps) * best.c_star));
  report.verdicts.push_back(at_most("cost<=opt_cost", Rational(static_cast<std::int64_t>(recount)),
                                    Rational(static_cast<std::int64_t>(best.cost))));
}

struct GraphInput {
  GraphBalancingInstance graph;
  TreeDecomposition decomposition;
};

GraphInput graph_input(const Json& input) {
  if (!input.is_object() || !input.contains("graph") || !input.contains("decomposition")) {
    fail(ErrorKind::InvalidInput, "graph balancing input needs \"graph\" and \"decomposition\"");
  }
  return {graph_from_json(input.at("graph")), decomposition_from_json(input.at("decomposition"))};
}

void evaluate_graph(const GraphInput& in, const Orientation& o, const RunOptions& options, RunReport& report) {
  report.solution = Json::array();
  for (Vertex h : o.head) report.solution.push_back(h);
  const auto& edges = in.graph.edges();
  bool valid = o.head.size() == edges.size();
  for (std::size_t e = 0; valid && e < edges.size(); ++e) valid = o.head[e] == edges[e].u || o.head[e] == edges[e].v;
  report.verdicts.push_back(equal("orientation_valid", valid ? 1 : 0, 1));
  if (!valid) return;
  report.makespan = Rational(max_in_degree(in.graph, o));
  const auto free_edges = static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const WeightedEdge& e) { return !e.loop(); }));
  if (!use_oracle(options.oracle, free_edges <= 20)) return;
  const auto exact = exact_orientation(in.graph);
  report.values.emplace_back("exact", Rational(exact.makespan));
  report.verdicts.push_back(equal("exact", report.makespan, Rational(exact.makespan)));
}

Assignment assignment_of(const Json& solution) { return assignment_from_json(solution); }

Orientation orientation_of(const Json& solution) {
  if (!solution.is_array()) fail(ErrorKind::InvalidInput, "orientation must be an array of heads");
  Orientation o;
  for (const auto& h : solution) o.head.push_back(h.get<Vertex>());
  return o;
}

RunReport evaluate(Algorithm algorithm, const Json& input, const Json& solution, const RunOptions& options,
                   RunReport report) {
  report.algorithm = std::string(name(algorithm));
  report.digest = digest(input);
  switch (algorithm) {
    case Algorithm::a_um:
    case Algorithm::a_res:
    case Algorithm::fpt:
      evaluate_unrelated(algorithm, instance_from_json(input), assignment_of(solution), options, report);
      break;
    case Algorithm::gb:
      evaluate_graph(graph_input(input), orientation_of(solution), options, report);
      break;
    case Algorithm::reopt_id:
    case Algorithm::reopt_un:
      evaluate_reopt(algorithm, reopt_input(input, options), assignment_of(solution), options, report);
      break;
  }
  return report;
}

}  // namespace

std::string_view name(Algorithm algorithm) { return kAlgorithmNames[static_cast<std::size_t>(algorithm)]; }

Algorithm parse_algorithm(std::string_view text) {
  for (std::size_t k = 0; k < kAlgorithmNames.size(); ++k) {
    if (kAlgorithmNames[k] == text) return static_cast<Algorithm>(k);
  }
  fail(ErrorKind::InvalidInput, "unknown algorithm '" + std::string(text) + "'");
}

OracleMode parse_oracle_mode(std::string_view text) {
  if (text == "on") return OracleMode::on;
  if (text == "off") return OracleMode::off;
  if (text == "auto") return OracleMode::automatic;
  fail(ErrorKind::InvalidInput, "oracle mode must be on, off or auto");
}

bool RunReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::string digest(const Json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport run_algorithm(Algorithm algorithm, const Json& input, const RunOptions& options) {
  RunReport report;
  Json solution;
  const auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::a_um:
      solution = to_json(schedule_fully_feasible(instance_from_json(input)));
      break;
    case Algorithm::a_res:
      solution = to_json(schedule_restricted(instance_from_json(input)));
      break;
    case Algorithm::fpt: {
      const Instance inst = instance_from_json(input);
      const Time T = minimal_T_for_scheme(inst, options.eps, options.k_cap);
      solution = to_json(solve_milp_scheme(inst, options.eps, T, options.k_cap));
      break;
    }
    case Algorithm::gb: {
      const GraphInput in = graph_input(input);
      const BalanceResult r = balance(in.graph, in.decomposition);
      report.values.emplace_back("reported", Rational(r.makespan));
      report.verdicts.push_back(equal("reported=max_in_degree", Rational(r.makespan),
                                      Rational(max_in_degree(in.graph, r.orientation))));
      solution = Json::array();
      for (Vertex h : r.orientation.head) solution.push_back(h);
      break;
    }
    case Algorithm::reopt_id: {
      IdenticalReoptOptions o;
      o.configuration_cap = options.config_cap;
      const auto r = reoptimize_identical(reopt_input(input, options), options.eps, o);
      report.cost = r.cost;
      solution = to_json(r.assignment);
      break;
    }
    case Algorithm::reopt_un: {
      const auto r = reoptimize_uniform(reopt_input(input, options), options.eps);
      report.cost = r.cost;
      report.values.emplace_back("fallbacks", Rational(static_cast<std::int64_t>(r.fallbacks)));
      solution = to_json(r.assignment);
      break;
    }
  }
  if (options.timing) {
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return evaluate(algorithm, input, solution, options, std::move(report));
}

RunReport verify_solution(Algorithm algorithm, const Json& input, const Json& solution, const RunOptions& options) {
  return evaluate(algorithm, input, solution, options, RunReport{});
}

Json to_json(const RunReport& report) {
  Json j;
  j["algorithm"] = report.algorithm;
  j["digest"] = report.digest;
  j["makespan"] = to_string(report.makespan);
  if (report.cost) j["cost"] = *report.cost;
  Json values = Json::object();
  for (const auto& [key, value] : report.values) values[key] = to_string(value);
  j["values"] = values;
  j["verdicts"] = Json::array();
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back({{"name", v.name},
                             {"value", to_string(v.value)},
                             {"relation", v.equality ? "==" : "<="},
                             {"bound", to_string(v.bound)},
                             {"pass", v.pass}});
  }
  j["pass"] = report.pass();
  j["solution"] = report.solution;
  if (report.wall_ms) j["wall_ms"] = *report.wall_ms;
  return j;
}

std::string table(const std::vector<RunReport>& reports) {
  std::vector<std::array<std::string, 5>> rows{{"algorithm", "digest", "makespan", "cost", "verdicts"}};
  for (const auto& r : reports) {
    std::string verdicts;
    for (const auto& v : r.verdicts) {
      if (!verdicts.empty()) verdicts += ' ';
      verdicts += v.name + (v.pass ? ":pass" : ":FAIL");
    }
    rows.push_back({r.algorithm, r.digest, to_string(r.makespan), r.cost ? std::to_string(*r.cost) : "-", verdicts});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace makespan
