#pragma once

#include "makespan/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace makespan {

using Time = std::int64_t;
using MachineIndex = std::size_t;
using JobIndex = std::size_t;

// An absent entry means the job cannot run on that machine.
using Entry = std::optional<Time>;
using TimeMatrix = std::vector<std::vector<Entry>>;  // rows are machines

enum class Kind { unrelated, restricted, uniform, identical };

std::string_view name(Kind kind);
Kind parse_kind(std::string_view text);

class Instance {
 public:
  Instance() = default;

  static Instance unrelated(TimeMatrix rows);
  static Instance restricted(TimeMatrix rows);
  static Instance identical(std::size_t machines, std::vector<Time> times);
  static Instance uniform(std::vector<Time> base_times, std::vector<Rational> speeds);
  // Validates the matrix against the tag; uniform instances need the factory above.
  static Instance from_matrix(Kind kind, TimeMatrix rows);

  Kind kind() const noexcept { return kind_; }
  std::size_t machines() const noexcept { return machines_; }
  std::size_t jobs() const noexcept { return jobs_; }
  bool integral() const noexcept { return kind_ != Kind::uniform; }

  bool feasible(MachineIndex i, JobIndex j) const;
  const Entry& entry(MachineIndex i, JobIndex j) const;
  // Integral kinds only; throws InfeasiblePairAssigned for absent entries.
  Time time(MachineIndex i, JobIndex j) const;
  // Any kind; uniform entries are base_time / speed.
  Rational rational_time(MachineIndex i, JobIndex j) const;

  // Uniform: the base times. Identical and restricted: the common job size.
  const std::vector<Time>& base_times() const;
  const std::vector<Rational>& speeds() const;
  bool has_job_sizes() const noexcept { return !base_times_.empty() || jobs_ == 0; }

  std::size_t feasible_count(JobIndex j) const;
  // True when every finite entry of a column is equal (restricted structure).
  bool restricted_structure() const;
  TimeMatrix matrix() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  void derive_job_sizes();

  Kind kind_ = Kind::unrelated;
  std::size_t machines_ = 0;
  std::size_t jobs_ = 0;
  std::vector<Entry> times_;  // machine-major, integral kinds only
  std::vector<Time> base_times_;
  std::vector<Rational> speeds_;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<MachineIndex> machine_of)
      : machine_of_(std::move(machine_of)) {}

  std::size_t size() const noexcept { return machine_of_.size(); }
  MachineIndex operator[](JobIndex j) const { return machine_of_.at(j); }
  void assign(JobIndex j, MachineIndex i) { machine_of_.at(j) = i; }
  const std::vector<MachineIndex>& machine_of() const noexcept { return machine_of_; }

  auto operator<=>(const Assignment&) const = default;

 private:
  std::vector<MachineIndex> machine_of_;
};

// Throws InvalidInput for a wrong length or machine index and
// InfeasiblePairAssigned for an absent entry.
void check_assignment(const Instance& inst, const Assignment& a);

struct LoadProfile {
  std::vector<Rational> load;
  Rational makespan;
  Rational avg_load;
};

LoadProfile load_profile(const Instance& inst, const Assignment& a);

// Integral kinds only.
std::vector<Time> integral_loads(const Instance& inst, const Assignment& a);

struct FeasibilityProfile {
  std::vector<Time> thresholds;
  std::vector<Rational> phi;
};

FeasibilityProfile feasibility_profile(const Instance& inst);

// Fraction of machines on which every job has a finite entry, minimised over jobs.
Rational restricted_phi(const Instance& inst);

}  // namespace makespan
