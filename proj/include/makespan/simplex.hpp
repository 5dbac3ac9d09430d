#pragma once

#include "makespan/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace makespan {

enum class Sense { le, eq, ge };

struct LinearRow {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Sense sense = Sense::le;
  Rational rhs;
};

// Variables are nonnegative.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<LinearRow> rows;
};

enum class LpStatus { Feasible, Infeasible };

struct LinearSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;
};

struct SimplexOptions {
  // NumericOverflow once a tableau entry needs more bits than this.
  std::size_t max_bits = 1u << 14;
};

// Phase-one simplex with Bland's rule, exact arithmetic throughout.
LinearSolution find_feasible_point(const LinearProgram& lp, const SimplexOptions& options = {});

// True when `values` satisfies every row and sign constraint exactly.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& values);

}  // namespace makespan
