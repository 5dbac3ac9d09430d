#pragma once

#include "makespan/instance.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace makespan {

using Vertex = std::size_t;

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Time weight = 0;

  bool loop() const noexcept { return u == v; }
};

class GraphBalancingInstance {
 public:
  GraphBalancingInstance() = default;
  GraphBalancingInstance(std::size_t vertices, std::vector<WeightedEdge> edges);

  std::size_t vertices() const noexcept { return vertices_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  // Largest number of distinct neighbours of a vertex.
  std::size_t max_degree() const;

  friend bool operator==(const GraphBalancingInstance&, const GraphBalancingInstance&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<WeightedEdge> edges_;
};

// Jobs with one or two feasible machines of a restricted instance.
GraphBalancingInstance graph_from_restricted(const Instance& inst);

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  std::size_t width() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class DecompositionProperty { ok, malformed_tree, vertex_coverage, edge_coverage, connectivity };

struct DecompositionCheck {
  DecompositionProperty property = DecompositionProperty::ok;
  std::string witness;

  bool ok() const noexcept { return property == DecompositionProperty::ok; }
};

std::string_view name(DecompositionProperty property);

DecompositionCheck validate_decomposition(const GraphBalancingInstance& g, const TreeDecomposition& td);

// head[e] is the vertex charged for edge e.
struct Orientation {
  std::vector<Vertex> head;
};

std::vector<Time> in_degrees(const GraphBalancingInstance& g, const Orientation& o);
Time max_in_degree(const GraphBalancingInstance& g, const Orientation& o);

struct BalanceOptions {
  std::size_t max_bag_edges = 24;
  std::size_t max_states = std::size_t{1} << 22;
};

struct BalanceResult {
  Orientation orientation;
  Time makespan = 0;
  std::size_t states = 0;
};

BalanceResult balance(const GraphBalancingInstance& g, const TreeDecomposition& td, const BalanceOptions& options = {});

}  // namespace makespan
