#include "makespan/graph_balancing.hpp"

#include "makespan/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace makespan {

GraphBalancingInstance::GraphBalancingInstance(std::size_t vertices, std::vector<WeightedEdge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u >= vertices_ || e.v >= vertices_) fail(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (e.weight <= 0) fail(ErrorKind::InvalidInput, "edge weights must be positive");
  }
}

std::size_t GraphBalancingInstance::max_degree() const {
  std::vector<std::set<Vertex>> neighbours(vertices_);
  for (const auto& e : edges_) {
    if (e.loop()) continue;
    neighbours[e.u].insert(e.v);
    neighbours[e.v].insert(e.u);
  }
  std::size_t best = 0;
  for (const auto& n : neighbours) best = std::max(best, n.size());
  return best;
}

GraphBalancingInstance graph_from_restricted(const Instance& inst) {
  if (!inst.integral() || !inst.restricted_structure()) {
    fail(ErrorKind::KindMismatch, "graph balancing needs a restricted instance");
  }
  std::vector<WeightedEdge> edges;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    std::vector<Vertex> ends;
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      if (inst.feasible(i, j)) ends.push_back(i);
    }
    if (ends.size() > 2) fail(ErrorKind::KindMismatch, "job with more than two feasible machines");
    edges.push_back({ends.front(), ends.back(), inst.base_times()[j]});
  }
  return GraphBalancingInstance(inst.machines(), std::move(edges));
}

std::size_t TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return largest == 0 ? 0 : largest - 1;
}

std::string_view name(DecompositionProperty property) {
  switch (property) {
    case DecompositionProperty::ok: return "ok";
    case DecompositionProperty::malformed_tree: return "malformed_tree";
    case DecompositionProperty::vertex_coverage: return "vertex_coverage";
    case DecompositionProperty::edge_coverage: return "edge_coverage";
    case DecompositionProperty::connectivity: return "connectivity";
  }
  return "ok";
}

namespace {

std::vector<std::vector<std::size_t>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::size_t>> adj(td.bags.size());
  for (const auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool bag_has(const std::vector<Vertex>& bag, Vertex v) {
  return std::find(bag.begin(), bag.end(), v) != bag.end();
}

}  // namespace

DecompositionCheck validate_decomposition(const GraphBalancingInstance& g, const TreeDecomposition& td) {
  const std::size_t t = td.bags.size();
  if (t == 0) {
    if (g.vertices() == 0) return {};
    return {DecompositionProperty::vertex_coverage, "no bags"};
  }
  for (std::size_t b = 0; b < t; ++b) {
    for (Vertex v : td.bags[b]) {
      if (v >= g.vertices()) return {DecompositionProperty::malformed_tree, "bag " + std::to_string(b) + " names vertex " + std::to_string(v)};
    }
  }
  if (td.tree_edges.size() != t - 1) {
    return {DecompositionProperty::malformed_tree, std::to_string(td.tree_edges.size()) + " tree edges for " + std::to_string(t) + " bags"};
  }
  for (const auto& [a, b] : td.tree_edges) {
    if (a >= t || b >= t || a == b) return {DecompositionProperty::malformed_tree, "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ")"};
  }
  const auto adj = tree_adjacency(td);
  {
    std::vector<bool> seen(t, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop();
      for (std::size_t c : adj[b]) {
        if (!seen[c]) {
          seen[c] = true;
          ++reached;
          queue.push(c);
        }
      }
    }
    if (reached != t) return {DecompositionProperty::malformed_tree, "bag tree is disconnected"};
  }
  for (Vertex v = 0; v < g.vertices(); ++v) {
    bool covered = false;
    for (const auto& bag : td.bags) covered = covered || bag_has(bag, v);
    if (!covered) return {DecompositionProperty::vertex_coverage, "vertex " + std::to_string(v)};
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    bool covered = false;
    for (const auto& bag : td.bags) covered = covered || (bag_has(bag, edge.u) && bag_has(bag, edge.v));
    if (!covered) {
      return {DecompositionProperty::edge_coverage,
              "edge " + std::to_string(e) + " (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")"};
    }
  }
  for (Vertex v = 0; v < g.vertices(); ++v) {
    std::vector<std::size_t> holders;
    for (std::size_t b = 0; b < t; ++b) {
      if (bag_has(td.bags[b], v)) holders.push_back(b);
    }
    std::vector<bool> seen(t, false);
    std::queue<std::size_t> queue;
    queue.push(holders.front());
    seen[holders.front()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop();
      for (std::size_t c : adj[b]) {
        if (!seen[c] && bag_has(td.bags[c], v)) {
          seen[c] = true;
          ++reached;
          queue.push(c);
        }
      }
    }
    if (reached != holders.size()) return {DecompositionProperty::connectivity, "vertex " + std::to_string(v)};
  }
  return {};
}

std::vector<Time> in_degrees(const GraphBalancingInstance& g, const Orientation& o) {
  if (o.head.size() != g.edges().size()) fail(ErrorKind::InvalidInput, "orientation length mismatch");
  std::vector<Time> load(g.vertices(), 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (o.head[e] != edge.u && o.head[e] != edge.v) fail(ErrorKind::InvalidInput, "orientation head is not an endpoint");
    load[o.head[e]] += edge.weight;
  }
  return load;
}

Time max_in_degree(const GraphBalancingInstance& g, const Orientation& o) {
  const auto load = in_degrees(g, o);
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

namespace {

// Partial state of a bag: orientation of its induced edges, loads of its
// vertices from the merged subtree, and the largest load of any forgotten vertex.
struct BagState {
  std::uint32_t mask = 0;
  std::vector<Time> loads;
  Time forgotten = 0;
  std::size_t prev = 0;         // state in the previous generation
  std::size_t child_state = 0;  // state in the merged child's final generation
};

struct Bag {
  std::vector<Vertex> vertices;           // sorted
  std::vector<std::size_t> edges;         // induced non-loop edges, ascending
  std::vector<std::size_t> children;      // ascending
  std::vector<std::vector<BagState>> generations;

  std::size_t local(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  }
  bool has(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
  std::optional<std::size_t> edge_slot(std::size_t e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
  }
};

Vertex head_for(const WeightedEdge& e, bool reversed) {
  const Vertex low = std::min(e.u, e.v);
  const Vertex high = std::max(e.u, e.v);
  return reversed ? low : high;
}

bool dominates(const BagState& a, const BagState& b) {
  if (a.forgotten > b.forgotten) return false;
  for (std::size_t k = 0; k < a.loads.size(); ++k) {
    if (a.loads[k] > b.loads[k]) return false;
  }
  return true;
}

Time state_value(const BagState& s) {
  Time best = s.forgotten;
  for (Time l : s.loads) best = std::max(best, l);
  return best;
}

class BalanceSolver {
 public:
  BalanceSolver(const GraphBalancingInstance& g, const TreeDecomposition& td, const BalanceOptions& options)
      : g_(g), options_(options), bags_(td.bags.size()) {
    const auto adj = tree_adjacency(td);
    std::vector<bool> seen(bags_.size(), false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop();
      order_.push_back(b);
      for (std::size_t c : adj[b]) {
        if (seen[c]) continue;
        seen[c] = true;
        bags_[b].children.push_back(c);
        queue.push(c);
      }
    }
    for (std::size_t b = 0; b < bags_.size(); ++b) {
      auto vs = td.bags[b];
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      bags_[b].vertices = std::move(vs);
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edges()[e];
      if (edge.loop()) continue;
      for (auto& bag : bags_) {
        if (bag.has(edge.u) && bag.has(edge.v)) bag.edges.push_back(e);
      }
    }
    // Each loop is charged in exactly one bag.
    loops_of_bag_.resize(bags_.size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edges()[e];
      if (!edge.loop()) continue;
      for (std::size_t b = 0; b < bags_.size(); ++b) {
        if (bags_[b].has(edge.u)) {
          loops_of_bag_[b].push_back(e);
          break;
        }
      }
    }
  }

  BalanceResult run() {
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) solve_bag(*it);
    const auto& root = bags_[0].generations.back();
    std::size_t best = 0;
    for (std::size_t s = 1; s < root.size(); ++s) {
      if (state_value(root[s]) < state_value(root[best])) best = s;
    }
    BalanceResult result;
    result.states = states_;
    result.makespan = state_value(root[best]);
    result.orientation.head.assign(g_.edges().size(), 0);
    for (std::size_t e = 0; e < g_.edges().size(); ++e) {
      if (g_.edges()[e].loop()) result.orientation.head[e] = g_.edges()[e].u;
    }
    reconstruct(0, best, result.orientation);
    return result;
  }

 private:
  void count_state() {
    if (++states_ > options_.max_states) fail(ErrorKind::BudgetExceeded, "graph-balancing state budget exhausted");
  }

  void solve_bag(std::size_t b) {
    Bag& bag = bags_[b];
    if (bag.edges.size() > options_.max_bag_edges) {
      fail(ErrorKind::BudgetExceeded, "bag " + std::to_string(b) + " has " + std::to_string(bag.edges.size()) +
                                          " induced edges, above the cap of " + std::to_string(options_.max_bag_edges));
    }
    std::vector<BagState> initial;
    const std::uint32_t rows = std::uint32_t{1} << bag.edges.size();
    for (std::uint32_t mask = 0; mask < rows; ++mask) {
      BagState s;
      s.mask = mask;
      s.loads.assign(bag.vertices.size(), 0);
      for (std::size_t k = 0; k < bag.edges.size(); ++k) {
        const auto& edge = g_.edges()[bag.edges[k]];
        s.loads[bag.local(head_for(edge, (mask >> k) & 1u))] += edge.weight;
      }
      for (std::size_t e : loops_of_bag_[b]) s.loads[bag.local(g_.edges()[e].u)] += g_.edges()[e].weight;
      count_state();
      initial.push_back(std::move(s));
    }
    bag.generations.push_back(std::move(initial));
    for (std::size_t c : bag.children) merge_child(bag, bags_[c]);
  }

  void merge_child(Bag& parent, const Bag& child) {
    // Shared induced edges, as (parent slot, child slot).
    std::vector<std::pair<std::size_t, std::size_t>> shared;
    for (std::size_t k = 0; k < parent.edges.size(); ++k) {
      if (auto slot = child.edge_slot(parent.edges[k])) shared.emplace_back(k, *slot);
    }
    std::vector<std::pair<std::size_t, std::size_t>> common;  // shared vertices (parent, child)
    std::vector<std::size_t> child_only;
    for (std::size_t k = 0; k < child.vertices.size(); ++k) {
      if (parent.has(child.vertices[k])) {
        common.emplace_back(parent.local(child.vertices[k]), k);
      } else {
        child_only.push_back(k);
      }
    }
    const auto& child_states = child.generations.back();
    std::map<std::uint32_t, std::vector<std::size_t>> by_key;
    for (std::size_t s = 0; s < child_states.size(); ++s) {
      std::uint32_t key = 0;
      for (std::size_t k = 0; k < shared.size(); ++k) key |= ((child_states[s].mask >> shared[k].second) & 1u) << k;
      by_key[key].push_back(s);
    }

    const auto& previous = parent.generations.back();
    std::vector<BagState> next;
    std::map<std::uint32_t, std::vector<std::size_t>> next_by_mask;
    for (std::size_t ps = 0; ps < previous.size(); ++ps) {
      const BagState& p = previous[ps];
      std::uint32_t key = 0;
      std::vector<Time> shared_in(parent.vertices.size(), 0);
      for (std::size_t k = 0; k < shared.size(); ++k) {
        const bool reversed = (p.mask >> shared[k].first) & 1u;
        key |= std::uint32_t{reversed} << k;
        const auto& edge = g_.edges()[parent.edges[shared[k].first]];
        shared_in[parent.local(head_for(edge, reversed))] += edge.weight;
      }
      auto found = by_key.find(key);
      if (found == by_key.end()) continue;
      for (std::size_t cs : found->second) {
        const BagState& c = child_states[cs];
        BagState merged;
        merged.mask = p.mask;
        merged.loads = p.loads;
        for (const auto& [pl, cl] : common) merged.loads[pl] += c.loads[cl] - shared_in[pl];
        merged.forgotten = std::max(p.forgotten, c.forgotten);
        for (std::size_t cl : child_only) merged.forgotten = std::max(merged.forgotten, c.loads[cl]);
        merged.prev = ps;
        merged.child_state = cs;
        insert_pareto(next, next_by_mask[merged.mask], std::move(merged));
      }
    }
    std::vector<BagState> compact;
    for (auto& s : next) {
      if (s.mask != kDropped) compact.push_back(std::move(s));
    }
    parent.generations.push_back(std::move(compact));
  }

  static constexpr std::uint32_t kDropped = 0xffffffffu;

  void insert_pareto(std::vector<BagState>& pool, std::vector<std::size_t>& group, BagState&& candidate) {
    for (std::size_t idx : group) {
      if (pool[idx].mask != kDropped && dominates(pool[idx], candidate)) return;
    }
    for (std::size_t idx : group) {
      if (pool[idx].mask != kDropped && dominates(candidate, pool[idx])) pool[idx].mask = kDropped;
    }
    group.erase(std::remove_if(group.begin(), group.end(), [&](std::size_t idx) { return pool[idx].mask == kDropped; }),
                group.end());
    count_state();
    group.push_back(pool.size());
    pool.push_back(std::move(candidate));
  }

  void reconstruct(std::size_t b, std::size_t state, Orientation& out) const {
    const Bag& bag = bags_[b];
    const BagState& s = bag.generations.back()[state];
    for (std::size_t k = 0; k < bag.edges.size(); ++k) {
      out.head[bag.edges[k]] = head_for(g_.edges()[bag.edges[k]], (s.mask >> k) & 1u);
    }
    std::size_t at = state;
    for (std::size_t gen = bag.generations.size() - 1; gen > 0; --gen) {
      const BagState& cur = bag.generations[gen][at];
      reconstruct(bag.children[gen - 1], cur.child_state, out);
      at = cur.prev;
    }
  }

  const GraphBalancingInstance& g_;
  BalanceOptions options_;
  std::vector<Bag> bags_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> loops_of_bag_;
  std::size_t states_ = 0;
};

}  // namespace

BalanceResult balance(const GraphBalancingInstance& g, const TreeDecomposition& td, const BalanceOptions& options) {
  const DecompositionCheck check = validate_decomposition(g, td);
  if (!check.ok()) fail(ErrorKind::InvalidDecomposition, std::string(name(check.property)) + ": " + check.witness);
  if (td.bags.empty()) return {};
  return BalanceSolver(g, td, options).run();
}

}  // namespace makespan
