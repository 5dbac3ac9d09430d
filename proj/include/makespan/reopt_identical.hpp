#pragma once

#include "makespan/instance.hpp"
#include "makespan/reopt.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace makespan {

enum class TargetMode { automatic, exact, approximate };

// Dual approximation: a schedule with makespan <= (1 + eps0) T, or empty when C* > T.
std::optional<Assignment> dual_approximation(const Instance& inst, Time T, const Rational& eps0);

// C* <= T <= (1 + eps0) C*. Automatic mode uses the exact oracle for n <= 12.
Time ptas_target(const Instance& inst, const Rational& eps0, TargetMode mode = TargetMode::automatic);

struct ItemScale {
  Time T = 0;
  Rational eps0;
  std::vector<Rational> alpha;                 // p_j / T
  std::vector<std::optional<std::size_t>> class_of;  // large items only
  std::vector<std::int64_t> class_units;       // rounded size / eps0^2, descending
  std::vector<std::int64_t> class_count;
  std::int64_t capacity_units = 0;             // floor(1 / eps0^2)

  bool large(JobIndex j) const { return class_of[j].has_value(); }
  Rational rounded(JobIndex j) const;
  Rational unit() const { return eps0 * eps0; }
};

ItemScale make_item_scale(const Instance& inst, Time T, const Rational& eps0);

// Per bin, the number of items of each size class.
struct Configuration {
  std::vector<std::vector<std::int64_t>> bins;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

inline constexpr std::size_t kDefaultConfigurationCap = 1'000'000;

// Every placement of the rounded large items into m unit bins, bins unordered.
// Throws ConfigurationBudgetExceeded past the cap.
void enumerate_configurations(const ItemScale& scale, std::size_t m,
                              const std::function<void(const Configuration&)>& visit,
                              std::size_t cap = kDefaultConfigurationCap);

// Places items (in the given order) into the first bin whose load stays within capacity.
// Returns the bin per item, or empty when some item does not fit.
std::optional<std::vector<std::size_t>> relaxed_first_fit(std::vector<Rational> bin_loads,
                                                          const std::vector<Rational>& items,
                                                          const Rational& capacity);

struct MatchOutcome {
  Assignment assignment;
  std::size_t cost = 0;
  Rational makespan;
  std::int64_t matching_cost = 0;
  std::vector<std::size_t> bin_of_machine;
};

// Min-cost matching of machines to configuration bins, then relaxed First-Fit of the small pool.
MatchOutcome match_and_cost(const ReoptInput& input, const ItemScale& scale, const Configuration& config);

struct IdenticalReoptOptions {
  std::size_t configuration_cap = kDefaultConfigurationCap;
  TargetMode target = TargetMode::automatic;
};

struct IdenticalReoptResult {
  Assignment assignment;
  std::size_t cost = 0;
  Rational makespan;
  Time T = 0;
  Rational sum_alpha;
  std::size_t configurations = 0;
};

IdenticalReoptResult reoptimize_identical(const ReoptInput& input, const Rational& eps,
                                          const IdenticalReoptOptions& options = {});

}  // namespace makespan
