#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace makespan {

// Cost matrix with absent entries for missing edges; rows <= columns.
using CostMatrix = std::vector<std::vector<std::optional<std::int64_t>>>;

struct AssignmentResult {
  std::vector<std::size_t> column_of_row;
  std::int64_t cost = 0;
};

// Minimum-cost matching saturating every row (Hungarian method with potentials).
// Throws NoPerfectMatching when no row-saturating matching exists.
AssignmentResult min_cost_assignment(const CostMatrix& cost, std::size_t columns);

// Hopcroft-Karp over adjacency lists of the left side.
std::vector<std::optional<std::size_t>> maximum_matching(
    const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_count);

}  // namespace makespan
