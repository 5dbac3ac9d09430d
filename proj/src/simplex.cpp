#include "makespan/simplex.hpp"

#include "makespan/errors.hpp"

#include <optional>

namespace makespan {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options) : options_(options) {
    const std::size_t rows = lp.rows.size();
    structural_ = lp.variables;
    std::size_t extra = 0;
    std::size_t artificial = 0;
    for (const auto& row : lp.rows) {
      Sense sense = effective_sense(row);
      if (sense != Sense::eq) ++extra;
      if (sense != Sense::le) ++artificial;
    }
    first_artificial_ = structural_ + extra;
    cols_ = first_artificial_ + artificial;
    cells_.assign(rows, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(rows, 0);

    std::size_t next_extra = structural_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t r = 0; r < rows; ++r) {
      const LinearRow& row = lp.rows[r];
      const bool flip = row.rhs < 0;
      const Rational sign = flip ? Rational(-1) : Rational(1);
      for (const auto& [var, coef] : row.terms) {
        if (var >= structural_) fail(ErrorKind::InvalidInput, "row references unknown variable");
        cells_[r][var] += sign * coef;
      }
      cells_[r][cols_] = sign * row.rhs;
      const Sense sense = effective_sense(row);
      if (sense == Sense::le) {
        cells_[r][next_extra] = 1;
        basis_[r] = next_extra++;
        continue;
      }
      if (sense == Sense::ge) cells_[r][next_extra++] = -1;
      cells_[r][next_artificial] = 1;
      basis_[r] = next_artificial++;
    }

    // Phase-one objective: minimise the sum of artificials, priced out against the basis.
    objective_.assign(cols_ + 1, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (c >= first_artificial_ && c < cols_) continue;
        objective_[c] -= cells_[r][c];
      }
    }
  }

  void optimise() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (objective_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < cells_.size(); ++r) {
        const Rational& a = cells_[r][*entering];
        if (a <= 0) continue;
        Rational ratio = cells_[r][cols_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so a leaving row always exists.
      if (!leaving) fail(ErrorKind::Infeasible, "unbounded phase-one direction");
      pivot(*leaving, *entering);
    }
  }

  bool feasible() const { return objective_[cols_] == 0; }

  std::vector<Rational> values() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (basis_[r] < structural_) x[basis_[r]] = cells_[r][cols_];
    }
    return x;
  }

 private:
  static Sense effective_sense(const LinearRow& row) {
    if (row.rhs >= 0 || row.sense == Sense::eq) return row.sense;
    return row.sense == Sense::le ? Sense::ge : Sense::le;
  }

  void check_bits(const Rational& v) const {
    if (bit_size(v) > options_.max_bits) fail(ErrorKind::NumericOverflow, "simplex tableau entry exceeds bit bound");
  }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<Rational>& pivot_row = cells_[row];
    const Rational scale = pivot_row[col];
    for (auto& v : pivot_row) {
      if (v == 0) continue;
      v /= scale;
      check_bits(v);
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational factor = target[col];
      if (factor == 0) return;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (pivot_row[c] == 0) continue;
        target[c] -= factor * pivot_row[c];
        check_bits(target[c]);
      }
    };
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r != row) eliminate(cells_[r]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  SimplexOptions options_;
  std::size_t structural_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LinearSolution find_feasible_point(const LinearProgram& lp, const SimplexOptions& options) {
  Tableau tableau(lp, options);
  tableau.optimise();
  LinearSolution solution;
  if (!tableau.feasible()) return solution;
  solution.status = LpStatus::Feasible;
  solution.values = tableau.values();
  return solution;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& values) {
  if (values.size() != lp.variables) return false;
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (const auto& [var, coef] : row.terms) lhs += coef * values[var];
    switch (row.sense) {
      case Sense::le:
        if (lhs > row.rhs) return false;
        break;
      case Sense::eq:
        if (lhs != row.rhs) return false;
        break;
      case Sense::ge:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace makespan
