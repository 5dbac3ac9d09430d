#pragma once

#include "makespan/instance.hpp"
#include "makespan/lp.hpp"

#include <vector>

namespace makespan {

struct BinPiece {
  JobIndex job = 0;
  Rational fraction;
};

// Unit-capacity sub-machine of a real machine.
struct SubMachineBin {
  MachineIndex machine = 0;
  std::size_t slot = 0;
  std::vector<BinPiece> pieces;
};

struct SubMachineGraph {
  std::vector<SubMachineBin> bins;
  std::vector<std::vector<std::size_t>> bins_of_job;  // edges, ascending bin index

  std::size_t bins_on(MachineIndex i) const;
};

// Packs each machine's fractions into bins by nonincreasing time, ties by job index.
// Throws MalformedFraction when a job's fractions do not sum to one.
SubMachineGraph build_submachine_graph(const Instance& inst, const FractionalAssignment& x);

// Min-cost matching of every job into the sub-machine graph.
Assignment round_fractional(const Instance& inst, const FractionalAssignment& x);

Assignment round(const Instance& inst, const LpSolution& x, const LpTLParams& params);

}  // namespace makespan
