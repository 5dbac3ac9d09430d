#pragma once

#include "makespan/instance.hpp"
#include "makespan/reopt.hpp"
#include "makespan/reopt_identical.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace makespan {

// The k with x in (eps^(k+1), eps^k], for 0 < x <= 1.
int size_interval(const Rational& x, const Rational& eps);

struct PieceClass {
  int interval = 0;
  std::int64_t units = 0;  // rounded size / eps^(interval+2)
  std::vector<JobIndex> jobs;
};

// Machines as bins of size s_i / s_1 and jobs as pieces p_j / (s_1 T).
struct UniformScale {
  Rational eps;
  Rational T;
  std::vector<Rational> capacity;
  std::vector<int> bin_interval;
  std::vector<MachineIndex> bin_order;  // decreasing capacity, ties by index
  std::vector<Rational> size;
  std::vector<std::optional<int>> interval;  // empty for zero-size pieces
  std::vector<std::int64_t> units;
  std::vector<std::vector<PieceClass>> classes;  // per interval, units descending
  std::vector<std::optional<std::size_t>> class_of;
  std::size_t stages = 0;

  Rational grid(int k) const;
  Rational rounded(JobIndex j) const;
  // Total rounded size of pieces in intervals >= k.
  Rational volume_from(int k) const;
  // True when bin i is enormous for piece j, so j may be packed there as small.
  bool enormous_for(MachineIndex i, JobIndex j) const;
};

// Throws NoPath when some piece exceeds the largest bin.
UniformScale make_uniform_scale(const Instance& inst, const Rational& T, const Rational& eps);

// Remaining pieces per class and the slack of enormous, huge and large bins,
// as multiples of eps^(k+2), eps^(k+3) and eps^(k+4).
struct LayerState {
  std::vector<std::int64_t> large;
  std::vector<std::int64_t> medium;
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  std::int64_t v = 0;

  auto operator<=>(const LayerState&) const = default;
};

// Large and medium pieces placed in one bin, counted per class.
struct BinPack {
  MachineIndex machine = 0;
  int interval = 0;
  std::vector<std::int64_t> large;
  std::vector<std::int64_t> medium;

  friend bool operator==(const BinPack&, const BinPack&) = default;
};

struct StageNode {
  LayerState state;
  std::size_t cost = 0;
  std::size_t pred = 0;
  BinPack pack;
};

// Lightest path from one start state to every state of the stage's last layer.
struct StageTable {
  std::vector<std::vector<StageNode>> layers;

  const std::vector<StageNode>& last() const { return layers.back(); }
  std::vector<BinPack> path_to(std::size_t end) const;
};

struct Transition {
  BinPack pack;
  LayerState state;
  std::size_t cost = 0;
};

inline constexpr std::size_t kDefaultStateCap = 2'000'000;

class LayeredGraph {
 public:
  LayeredGraph(UniformScale scale, PriorPlacement prior, std::size_t state_cap = kDefaultStateCap);

  const UniformScale& scale() const noexcept { return scale_; }
  const PriorPlacement& prior() const noexcept { return prior_; }
  std::size_t stage_count() const noexcept { return scale_.stages; }
  const std::vector<MachineIndex>& stage_bins(std::size_t k) const { return stage_bins_[k]; }
  LayerState initial_state() const;

  // Every pack of the layer's bin from the given state, with its edge cost.
  std::vector<Transition> successors(std::size_t k, std::size_t layer, const LayerState& s) const;
  // The update arc after stage k, or empty when the slack is insufficient.
  // After the last stage a valid update reaches "success".
  std::optional<LayerState> update(std::size_t k, const LayerState& end) const;
  const StageTable& explore(std::size_t k, const LayerState& start);
  std::size_t states() const noexcept { return states_; }

 private:
  std::int64_t cap_v1(std::size_t k) const;
  std::int64_t cap_v2(std::size_t k) const;
  std::int64_t cap_v(std::size_t k) const;

  UniformScale scale_;
  PriorPlacement prior_;
  std::size_t state_cap_;
  std::size_t states_ = 0;
  std::vector<std::vector<MachineIndex>> stage_bins_;
  std::vector<std::vector<std::vector<std::int64_t>>> own_;  // [machine][interval][class]
  std::map<std::pair<std::size_t, LayerState>, StageTable> memo_;
};

LayeredGraph build_layered_graph(const ReoptInput& input, const Rational& T, const Rational& eps,
                                 std::size_t state_cap = kDefaultStateCap);

// Every initial-to-success path, as the list of bin packs; for testing.
void for_each_path(const LayeredGraph& graph,
                   const std::function<void(const std::vector<BinPack>&, std::size_t cost)>& visit);

bool layered_path_exists(const Instance& inst, const Rational& T, const Rational& eps,
                         std::size_t state_cap = kDefaultStateCap);

// C* <= T <= (1 + eps) C*. Automatic mode uses the exact oracle for n <= 10.
Rational uniform_ptas_target(const Instance& inst, const Rational& eps, TargetMode mode = TargetMode::automatic);

// The internal accuracy used for a target accuracy: 1 / ceil(8 / eps_target).
Rational internal_epsilon(const Rational& eps_target);

struct UniformDecode {
  Assignment assignment;
  std::size_t cost = 0;
  Rational makespan;
  bool fallback_used = false;  // the home-first greedy left a piece without room
};

// Places the path's packs, then the remaining pieces as small.
UniformDecode decode_path(const LayeredGraph& graph, const Instance& inst, const std::vector<BinPack>& packs);

struct UniformReoptOptions {
  std::size_t state_cap = kDefaultStateCap;
  std::size_t choice_cap = 1'000'000;
  TargetMode target = TargetMode::automatic;
};

struct UniformReoptResult {
  Assignment assignment;
  std::size_t cost = 0;
  Rational makespan;
  Rational T;
  Rational eps;  // internal accuracy
  std::size_t stages = 0;
  std::size_t choices = 0;
  std::size_t fallbacks = 0;
};

// Throws NoPath when the layered graph has no initial-to-success path at T.
UniformReoptResult reoptimize_uniform(const ReoptInput& input, const Rational& eps_target,
                                      const UniformReoptOptions& options = {});

// Makespan bound relative to T for internal accuracy eps.
Rational uniform_load_factor(const Rational& eps);

}  // namespace makespan
