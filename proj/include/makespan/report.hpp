#pragma once

#include "makespan/io.hpp"
#include "makespan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace makespan {

enum class Algorithm { a_um, a_res, fpt, gb, reopt_id, reopt_un };

std::string_view name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

enum class OracleMode { on, off, automatic };

OracleMode parse_oracle_mode(std::string_view text);

struct RunOptions {
  Rational eps = make_rational(1, 2);
  std::optional<Rational> speed_ratio;  // overrides the file's speed_ratio_bound
  std::size_t k_cap = 20;
  std::size_t config_cap = 1'000'000;
  OracleMode oracle = OracleMode::automatic;
  bool timing = false;
};

// value <= bound, or value == bound for exactness checks.
struct Verdict {
  std::string name;
  Rational value;
  Rational bound;
  bool equality = false;
  bool pass = false;
};

struct RunReport {
  std::string algorithm;
  std::string digest;
  Rational makespan;
  std::optional<std::size_t> cost;
  std::vector<std::pair<std::string, Rational>> values;  // algorithm and oracle quantities
  std::vector<Verdict> verdicts;
  Json solution;
  std::optional<double> wall_ms;

  bool pass() const;
};

// FNV-1a 64 over the compact dump, as 16 hex digits.
std::string digest(const Json& j);

RunReport run_algorithm(Algorithm algorithm, const Json& input, const RunOptions& options);

// Recomputes the verdicts for a stored solution without rerunning the algorithm.
RunReport verify_solution(Algorithm algorithm, const Json& input, const Json& solution, const RunOptions& options);

Json to_json(const RunReport& report);
// Aligned text table, one row per report.
std::string table(const std::vector<RunReport>& reports);

}  // namespace makespan
