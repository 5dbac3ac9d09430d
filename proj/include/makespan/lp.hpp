#pragma once

#include "makespan/instance.hpp"
#include "makespan/simplex.hpp"

#include <vector>

namespace makespan {

struct LpTLParams {
  Time T = 0;
  Rational L;
};

struct PairVariable {
  MachineIndex machine = 0;
  JobIndex job = 0;
};

// LP(T, L): one variable per pair with a finite time not above T.
struct LpProblem {
  std::size_t machines = 0;
  std::size_t jobs = 0;
  std::vector<PairVariable> variables;
  LinearProgram program;
};

class FractionalAssignment {
 public:
  FractionalAssignment() = default;
  FractionalAssignment(std::size_t machines, std::size_t jobs)
      : machines_(machines), jobs_(jobs), x_(machines * jobs, Rational(0)) {}

  std::size_t machines() const noexcept { return machines_; }
  std::size_t jobs() const noexcept { return jobs_; }
  const Rational& at(MachineIndex i, JobIndex j) const { return x_.at(i * jobs_ + j); }
  Rational& at(MachineIndex i, JobIndex j) { return x_.at(i * jobs_ + j); }

 private:
  std::size_t machines_ = 0;
  std::size_t jobs_ = 0;
  std::vector<Rational> x_;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  FractionalAssignment x;
};

LpProblem build_lp(const Instance& inst, const LpTLParams& params);
LpSolution solve_feasibility(const LpProblem& lp, const SimplexOptions& options = {});
bool lp_feasible(const Instance& inst, const LpTLParams& params);

// Minimal integer T with LP(T, T) feasible, then minimal L on the 1/m grid.
LpTLParams minimal_TL(const Instance& inst);

// Lower and upper ends of the T search range.
Time lower_time_bound(const Instance& inst);
Time upper_time_bound(const Instance& inst);

}  // namespace makespan
