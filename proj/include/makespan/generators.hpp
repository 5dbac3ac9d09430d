#pragma once

#include "makespan/graph_balancing.hpp"
#include "makespan/instance.hpp"
#include "makespan/reopt.hpp"

#include <cstdint>
#include <random>

namespace makespan {

// Bounded draws on top of mt19937_64, identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  // k distinct indices out of n, ascending.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

// Every job runs in [1, p_max] on exactly `feasible` machines and in
// (n p_max, 2 n p_max] elsewhere. Job 0 takes p_max wherever it is feasible,
// so T_opt >= p_max and the feasibility parameter is exactly feasible / m.
Instance fully_feasible_planted(std::size_t machines, std::size_t jobs, Time p_max, std::size_t feasible,
                                std::uint64_t seed);

// Job 0 has exactly `min_feasible` machines, the others at least that many.
Instance restricted_random(std::size_t machines, std::size_t jobs, Time p_max, std::size_t min_feasible,
                           std::uint64_t seed);

// Speeds k / denominator with k in [denominator, ratio * denominator].
Instance uniform_bounded_ratio(std::size_t machines, std::size_t jobs, Time p_max, const Rational& ratio,
                               std::int64_t denominator, std::uint64_t seed);

struct GraphWithDecomposition {
  GraphBalancingInstance graph;
  TreeDecomposition decomposition;
};

// window == 0 gives one bag; otherwise a path of bags {t, ..., t + window}
// with every edge inside some bag.
GraphWithDecomposition graph_balancing_random(std::size_t vertices, std::size_t edges, Time w_max, std::size_t loops,
                                              std::size_t window, std::uint64_t seed);

struct PerturbationSpec {
  Kind kind = Kind::identical;
  std::size_t machines = 2;
  std::size_t jobs = 4;
  Time p_max = 10;
  std::size_t add_jobs = 0;
  std::size_t remove_jobs = 0;
  std::size_t add_machines = 0;
  std::size_t remove_machines = 0;
  Rational ratio = 1;  // uniform speed ratio bound
  std::int64_t denominator = 4;
  std::uint64_t seed = 0;
};

// sigma0 is optimal for the old instance when the oracle can afford it, LPT otherwise.
ReoptInput reopt_perturbation(const PerturbationSpec& spec);

}  // namespace makespan
