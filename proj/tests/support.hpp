#pragma once

#include "makespan/feasible_scheduler.hpp"
#include "makespan/generators.hpp"
#include "makespan/instance.hpp"
#include "makespan/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace test {

using makespan::Entry;
using makespan::Instance;
using makespan::Rational;
using makespan::Time;

inline Rational R(std::int64_t num, std::int64_t den = 1) { return makespan::make_rational(num, den); }

inline constexpr Entry INF = std::nullopt;

// Random unrelated matrix; each job keeps at least one finite entry.
inline Instance random_unrelated(makespan::Rng& rng, std::size_t m, std::size_t n, Time p_max, int infeasible_percent = 0) {
  makespan::TimeMatrix rows(m, std::vector<Entry>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t keep = rng.index(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != keep && rng.uniform(1, 100) <= infeasible_percent) continue;
      rows[i][j] = rng.uniform(1, p_max);
    }
  }
  return Instance::unrelated(std::move(rows));
}

inline std::vector<Time> random_times(makespan::Rng& rng, std::size_t n, Time p_max) {
  std::vector<Time> p;
  for (std::size_t j = 0; j < n; ++j) p.push_back(rng.uniform(1, p_max));
  return p;
}

// Fraction of machines with time <= T, minimised over jobs.
inline Rational phi_at(const Instance& inst, const Rational& T) {
  std::size_t least = inst.machines();
  for (makespan::JobIndex j = 0; j < inst.jobs(); ++j) {
    std::size_t count = 0;
    for (makespan::MachineIndex i = 0; i < inst.machines(); ++i) {
      count += inst.feasible(i, j) && Rational(inst.time(i, j)) <= T;
    }
    least = std::min(least, count);
  }
  return makespan::make_rational(static_cast<std::int64_t>(least), static_cast<std::int64_t>(inst.machines()));
}

// Every subset of Bad sees at least as many Good machines through jmax edges.
inline bool hall_holds(const makespan::BalanceView& view) {
  const std::size_t k = view.bad.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::set<makespan::MachineIndex> nbrs;
    std::size_t size = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (!(mask >> b & 1)) continue;
      ++size;
      if (const auto j = view.jmax[view.bad[b]]) nbrs.insert(view.good_for[*j].begin(), view.good_for[*j].end());
    }
    if (nbrs.size() < size) return false;
  }
  return true;
}

}  // namespace test
