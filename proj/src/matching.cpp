#include "makespan/matching.hpp"

#include "makespan/errors.hpp"

#include <limits>
#include <queue>

namespace makespan {

AssignmentResult min_cost_assignment(const CostMatrix& cost, std::size_t columns) {
  const std::size_t rows = cost.size();
  AssignmentResult result;
  if (rows == 0) return result;
  if (rows > columns) fail(ErrorKind::NoPerfectMatching, "more rows than columns");
  for (const auto& row : cost) {
    if (row.size() != columns) fail(ErrorKind::InvalidInput, "ragged cost matrix");
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based arrays; column 0 is the virtual start.
  std::vector<std::int64_t> u(rows + 1, 0), v(columns + 1, 0);
  std::vector<std::size_t> row_of_col(columns + 1, 0), way(columns + 1, 0);
  for (std::size_t r = 1; r <= rows; ++r) {
    row_of_col[0] = r;
    std::size_t col0 = 0;
    std::vector<std::int64_t> minv(columns + 1, kInf);
    std::vector<bool> used(columns + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = row_of_col[col0];
      std::int64_t delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= columns; ++c) {
        if (used[c]) continue;
        const auto& entry = cost[r0 - 1][c - 1];
        if (entry) {
          const std::int64_t cur = *entry - u[r0] - v[c];
          if (cur < minv[c]) {
            minv[c] = cur;
            way[c] = col0;
          }
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      if (col1 == 0) fail(ErrorKind::NoPerfectMatching, "row " + std::to_string(r - 1) + " cannot be matched");
      for (std::size_t c = 0; c <= columns; ++c) {
        if (used[c]) {
          u[row_of_col[c]] += delta;
          v[c] -= delta;
        } else if (minv[c] != kInf) {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  result.column_of_row.assign(rows, 0);
  for (std::size_t c = 1; c <= columns; ++c) {
    if (row_of_col[c] != 0) result.column_of_row[row_of_col[c] - 1] = c - 1;
  }
  for (std::size_t r = 0; r < rows; ++r) result.cost += *cost[r][result.column_of_row[r]];
  return result;
}

std::vector<std::optional<std::size_t>> maximum_matching(
    const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_count) {
  const std::size_t left_count = adjacency.size();
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_left(left_count, kFree), match_right(right_count, kFree);
  std::vector<std::size_t> dist(left_count);

  auto bfs = [&]() {
    std::queue<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t l = 0; l < left_count; ++l) {
      if (match_left[l] == kFree) {
        dist[l] = 0;
        queue.push(l);
      } else {
        dist[l] = kFree;
      }
    }
    while (!queue.empty()) {
      const std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : adjacency[l]) {
        const std::size_t next = match_right[r];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[next] == kFree) {
          dist[next] = dist[l] + 1;
          queue.push(next);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (std::size_t r : adjacency[l]) {
      const std::size_t next = match_right[r];
      if (next == kFree || (dist[next] == dist[l] + 1 && self(self, next))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = kFree;
    return false;
  };

  while (bfs()) {
    for (std::size_t l = 0; l < left_count; ++l) {
      if (match_left[l] == kFree) dfs(dfs, l);
    }
  }
  std::vector<std::optional<std::size_t>> result(left_count);
  for (std::size_t l = 0; l < left_count; ++l) {
    if (match_left[l] != kFree) result[l] = match_left[l];
  }
  return result;
}

}  // namespace makespan
