#include "makespan/errors.hpp"
#include "makespan/generators.hpp"
#include "makespan/io.hpp"
#include "makespan/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <thread>

using namespace makespan;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

int exit_code_for(const Error& e) {
  if (is_budget(e.kind())) return kBudget;
  switch (e.kind()) {
    case ErrorKind::NoPath:
    case ErrorKind::RelaxedPackingFailed:
    case ErrorKind::Infeasible:
      return kViolation;
    default:
      return kInputError;
  }
}

struct Knobs {
  std::string family;
  std::size_t m = 3;
  std::size_t n = 6;
  Time p_max = 20;
  std::size_t d = 0;  // 0 means m
  std::string ratio = "2";
  std::int64_t denominator = 4;
  std::size_t vertices = 6;
  std::size_t edges = 8;
  std::size_t loops = 1;
  std::size_t window = 0;
  std::string kind = "identical";
  std::size_t add_jobs = 0;
  std::size_t remove_jobs = 0;
  std::size_t add_machines = 0;
  std::size_t remove_machines = 0;
  std::uint64_t seed = 1;
};

Json generate(const Knobs& k) {
  const std::size_t d = k.d == 0 ? k.m : k.d;
  if (k.family == "fully_feasible_planted") return to_json(fully_feasible_planted(k.m, k.n, k.p_max, d, k.seed));
  if (k.family == "restricted_random") return to_json(restricted_random(k.m, k.n, k.p_max, d, k.seed));
  if (k.family == "uniform_bounded_ratio") {
    return to_json(uniform_bounded_ratio(k.m, k.n, k.p_max, parse_rational(k.ratio), k.denominator, k.seed));
  }
  if (k.family == "graph_balancing_random") {
    const auto g = graph_balancing_random(k.vertices, k.edges, k.p_max, k.loops, k.window, k.seed);
    return Json{{"graph", to_json(g.graph)}, {"decomposition", to_json(g.decomposition)}};
  }
  if (k.family == "reopt_perturbation") {
    PerturbationSpec spec;
    spec.kind = parse_kind(k.kind);
    spec.machines = k.m;
    spec.jobs = k.n;
    spec.p_max = k.p_max;
    spec.add_jobs = k.add_jobs;
    spec.remove_jobs = k.remove_jobs;
    spec.add_machines = k.add_machines;
    spec.remove_machines = k.remove_machines;
    spec.ratio = parse_rational(k.ratio);
    spec.denominator = k.denominator;
    spec.seed = k.seed;
    return to_json(reopt_perturbation(spec));
  }
  fail(ErrorKind::InvalidInput, "unknown family '" + k.family + "'");
}

struct RunFlags {
  std::string algorithm;
  std::string input;
  std::string solution;
  std::string eps = "1/2";
  std::string speed_ratio;
  std::size_t k_cap = 20;
  std::size_t config_cap = 1'000'000;
  std::string oracle = "auto";
  bool timing = false;
  std::string out;
  bool show_table = false;
};

RunOptions options_of(const RunFlags& f) {
  RunOptions o;
  o.eps = parse_rational(f.eps);
  if (o.eps <= 0) fail(ErrorKind::InvalidInput, "--eps must be positive");
  if (!f.speed_ratio.empty()) o.speed_ratio = parse_rational(f.speed_ratio);
  o.k_cap = f.k_cap;
  o.config_cap = f.config_cap;
  o.oracle = parse_oracle_mode(f.oracle);
  o.timing = f.timing;
  return o;
}

int emit(const std::vector<RunReport>& reports, const RunFlags& f) {
  std::string lines;
  for (const auto& r : reports) lines += dump(to_json(r));
  if (f.out.empty()) {
    std::cout << lines;
  } else {
    write_text_file(f.out, lines);
  }
  if (f.show_table || !f.out.empty()) std::cout << table(reports);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const RunReport& r) { return r.pass(); });
  return ok ? kPass : kViolation;
}

struct SuiteCase {
  Algorithm algorithm;
  Json input;
  RunOptions options;
};

std::vector<SuiteCase> suite_cases(std::size_t count, std::uint64_t seed, const RunOptions& base) {
  std::vector<SuiteCase> cases;
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint64_t s = seed + t;
    cases.push_back({Algorithm::a_um, to_json(fully_feasible_planted(3, 6, 20, 3, s)), base});
    cases.push_back({Algorithm::a_res, to_json(restricted_random(3, 8, 20, 2, s)), base});
    cases.push_back({Algorithm::fpt, to_json(fully_feasible_planted(2, 5, 20, 2, s)), base});
    const auto g = graph_balancing_random(6, 8, 9, 2, 2, s);
    cases.push_back({Algorithm::gb, Json{{"graph", to_json(g.graph)}, {"decomposition", to_json(g.decomposition)}}, base});
    PerturbationSpec id;
    id.machines = 3;
    id.jobs = 6;
    id.add_jobs = 1;
    id.remove_jobs = 1;
    id.seed = s;
    cases.push_back({Algorithm::reopt_id, to_json(reopt_perturbation(id)), base});
    PerturbationSpec un = id;
    un.kind = Kind::uniform;
    un.machines = 2;
    un.jobs = 5;
    un.ratio = 2;
    cases.push_back({Algorithm::reopt_un, to_json(reopt_perturbation(un)), base});
  }
  return cases;
}

RunReport failed_report(const SuiteCase& c, const Error& e) {
  RunReport r;
  r.algorithm = std::string(name(c.algorithm));
  r.digest = digest(c.input);
  r.verdicts.push_back({"error:" + std::string(name(e.kind())), 0, 0, true, false});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Makespan approximation and reoptimization toolkit"};
  app.require_subcommand(1);

  Knobs knobs;
  std::string generate_out;
  auto* gen = app.add_subcommand("generate", "Write a generated instance as JSON");
  gen->add_option("--family", knobs.family, "fully_feasible_planted, restricted_random, uniform_bounded_ratio, "
                                            "graph_balancing_random or reopt_perturbation")
      ->required();
  gen->add_option("--m", knobs.m, "Machines");
  gen->add_option("--n", knobs.n, "Jobs");
  gen->add_option("--pmax", knobs.p_max, "Largest processing time or edge weight");
  gen->add_option("--d", knobs.d, "Feasible machines per job (default m)");
  gen->add_option("--b", knobs.ratio, "Speed ratio bound");
  gen->add_option("--den", knobs.denominator, "Speed denominator");
  gen->add_option("--vertices", knobs.vertices, "Graph vertices");
  gen->add_option("--edges", knobs.edges, "Graph edges");
  gen->add_option("--loops", knobs.loops, "Graph loops");
  gen->add_option("--window", knobs.window, "Path decomposition window, 0 for one bag");
  gen->add_option("--kind", knobs.kind, "identical or uniform");
  gen->add_option("--add-jobs", knobs.add_jobs);
  gen->add_option("--remove-jobs", knobs.remove_jobs);
  gen->add_option("--add-machines", knobs.add_machines);
  gen->add_option("--remove-machines", knobs.remove_machines);
  gen->add_option("--seed", knobs.seed);
  gen->add_option("--out", generate_out, "Output file (default stdout)");

  RunFlags flags;
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--eps", flags.eps, "Accuracy as a fraction");
    cmd->add_option("--b", flags.speed_ratio, "Speed ratio bound for uniform inputs");
    cmd->add_option("--k-cap", flags.k_cap, "Largest number of large pairs");
    cmd->add_option("--config-cap", flags.config_cap, "Largest number of configurations");
    cmd->add_option("--oracle", flags.oracle, "on, off or auto");
    cmd->add_flag("--timing", flags.timing, "Record wall time in reports");
    cmd->add_option("--out", flags.out, "JSON lines output file (default stdout)");
    cmd->add_flag("--table", flags.show_table, "Print the aligned table");
  };
  auto* run = app.add_subcommand("run", "Run one algorithm on one input");
  run->add_option("--algo", flags.algorithm, "a_um, a_res, fpt, gb, reopt_id or reopt_un")->required();
  run->add_option("--input", flags.input)->required();
  add_run_flags(run);

  auto* verify = app.add_subcommand("verify", "Recompute verdicts for a stored solution or report");
  verify->add_option("--algo", flags.algorithm)->required();
  verify->add_option("--input", flags.input)->required();
  verify->add_option("--solution", flags.solution, "Assignment, orientation, or a report line")->required();
  add_run_flags(verify);

  std::size_t count = 5;
  std::uint64_t seed = 1;
  auto* suite = app.add_subcommand("suite", "Run every algorithm on generated desk-scale inputs");
  suite->add_option("--count", count, "Instances per algorithm");
  suite->add_option("--seed", seed);
  add_run_flags(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (gen->parsed()) {
      const std::string text = dump(generate(knobs));
      if (generate_out.empty()) {
        std::cout << text;
      } else {
        write_text_file(generate_out, text);
      }
      return kPass;
    }
    const RunOptions options = options_of(flags);
    if (run->parsed()) {
      return emit({run_algorithm(parse_algorithm(flags.algorithm), read_json_file(flags.input), options)}, flags);
    }
    if (verify->parsed()) {
      Json solution = read_json_file(flags.solution);
      if (solution.is_object() && solution.contains("solution")) solution = solution.at("solution");
      return emit({verify_solution(parse_algorithm(flags.algorithm), read_json_file(flags.input), solution, options)},
                  flags);
    }
    const auto cases = suite_cases(count, seed, options);
    std::vector<RunReport> reports(cases.size());
    bool budget = false;
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < cases.size(); begin += width) {
      std::vector<std::future<RunReport>> batch;
      const std::size_t end = std::min(cases.size(), begin + width);
      for (std::size_t c = begin; c < end; ++c) {
        batch.push_back(std::async(std::launch::async, [&cases, c] {
          try {
            return run_algorithm(cases[c].algorithm, cases[c].input, cases[c].options);
          } catch (const Error& e) {
            return failed_report(cases[c], e);
          }
        }));
      }
      for (std::size_t c = begin; c < end; ++c) {
        reports[c] = batch[c - begin].get();
        if (!reports[c].pass() && reports[c].verdicts.back().name.rfind("error:", 0) == 0) {
          const auto kind = reports[c].verdicts.back().name.substr(6);
          budget = budget || kind.find("Budget") != std::string::npos;
        }
      }
    }
    const int code = emit(reports, flags);
    return budget ? kBudget : code;
  } catch (const Error& e) {
    std::cerr << "error: " << name(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kInputError;
  }
}
