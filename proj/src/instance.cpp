#include "makespan/instance.hpp"

#include "makespan/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace makespan {

std::string_view name(Kind kind) {
  switch (kind) {
    case Kind::unrelated: return "unrelated";
    case Kind::restricted: return "restricted";
    case Kind::uniform: return "uniform";
    case Kind::identical: return "identical";
  }
  return "unrelated";
}

Kind parse_kind(std::string_view text) {
  if (text == "unrelated") return Kind::unrelated;
  if (text == "restricted") return Kind::restricted;
  if (text == "uniform") return Kind::uniform;
  if (text == "identical") return Kind::identical;
  fail(ErrorKind::InvalidInput, "unknown instance kind '" + std::string(text) + "'");
}

Instance Instance::from_matrix(Kind kind, TimeMatrix rows) {
  if (kind == Kind::uniform) {
    fail(ErrorKind::InvalidInput, "uniform instances are built from base times and speeds");
  }
  Instance inst;
  inst.kind_ = kind;
  inst.machines_ = rows.size();
  inst.jobs_ = rows.empty() ? 0 : rows.front().size();
  if (inst.machines_ == 0) fail(ErrorKind::InvalidInput, "instance needs at least one machine");
  inst.times_.reserve(inst.machines_ * inst.jobs_);
  for (const auto& row : rows) {
    if (row.size() != inst.jobs_) fail(ErrorKind::InvalidInput, "ragged processing-time matrix");
    for (const auto& e : row) {
      if (e && *e < 0) fail(ErrorKind::InvalidInput, "negative processing time");
      inst.times_.push_back(e);
    }
  }
  for (JobIndex j = 0; j < inst.jobs_; ++j) {
    if (inst.feasible_count(j) == 0) {
      fail(ErrorKind::InvalidInput, "job " + std::to_string(j) + " has no feasible machine");
    }
  }
  if (kind == Kind::identical) {
    for (MachineIndex i = 0; i < inst.machines_; ++i) {
      for (JobIndex j = 0; j < inst.jobs_; ++j) {
        if (!inst.entry(i, j) || *inst.entry(i, j) != *inst.entry(0, j)) {
          fail(ErrorKind::InvalidInput, "identical instance needs equal finite rows");
        }
      }
    }
  }
  if (kind == Kind::restricted && !inst.restricted_structure()) {
    fail(ErrorKind::InvalidInput, "restricted instance needs one finite value per column");
  }
  if (kind == Kind::identical || kind == Kind::restricted) inst.derive_job_sizes();
  return inst;
}

Instance Instance::unrelated(TimeMatrix rows) { return from_matrix(Kind::unrelated, std::move(rows)); }

Instance Instance::restricted(TimeMatrix rows) { return from_matrix(Kind::restricted, std::move(rows)); }

Instance Instance::identical(std::size_t machines, std::vector<Time> times) {
  TimeMatrix rows(machines, std::vector<Entry>(times.begin(), times.end()));
  return from_matrix(Kind::identical, std::move(rows));
}

Instance Instance::uniform(std::vector<Time> base_times, std::vector<Rational> speeds) {
  if (speeds.empty()) fail(ErrorKind::InvalidInput, "instance needs at least one machine");
  for (const auto& s : speeds) {
    if (s <= 0) fail(ErrorKind::InvalidInput, "speeds must be positive");
  }
  for (Time p : base_times) {
    if (p <= 0) fail(ErrorKind::InvalidInput, "uniform base times must be positive");
  }
  Instance inst;
  inst.kind_ = Kind::uniform;
  inst.machines_ = speeds.size();
  inst.jobs_ = base_times.size();
  inst.base_times_ = std::move(base_times);
  inst.speeds_ = std::move(speeds);
  return inst;
}

void Instance::derive_job_sizes() {
  base_times_.assign(jobs_, 0);
  for (JobIndex j = 0; j < jobs_; ++j) {
    for (MachineIndex i = 0; i < machines_; ++i) {
      if (entry(i, j)) {
        base_times_[j] = *entry(i, j);
        break;
      }
    }
  }
}

bool Instance::feasible(MachineIndex i, JobIndex j) const {
  if (kind_ == Kind::uniform) return true;
  return times_[i * jobs_ + j].has_value();
}

const Entry& Instance::entry(MachineIndex i, JobIndex j) const {
  if (kind_ == Kind::uniform) fail(ErrorKind::KindMismatch, "uniform instance has no integral matrix");
  return times_.at(i * jobs_ + j);
}

Time Instance::time(MachineIndex i, JobIndex j) const {
  const Entry& e = entry(i, j);
  if (!e) {
    fail(ErrorKind::InfeasiblePairAssigned,
         "job " + std::to_string(j) + " on machine " + std::to_string(i));
  }
  return *e;
}

Rational Instance::rational_time(MachineIndex i, JobIndex j) const {
  if (kind_ == Kind::uniform) return Rational(base_times_.at(j)) / speeds_.at(i);
  return Rational(time(i, j));
}

const std::vector<Time>& Instance::base_times() const {
  if (!has_job_sizes()) fail(ErrorKind::KindMismatch, "unrelated instance has no job sizes");
  return base_times_;
}

const std::vector<Rational>& Instance::speeds() const {
  if (kind_ != Kind::uniform) fail(ErrorKind::KindMismatch, "only uniform instances have speeds");
  return speeds_;
}

std::size_t Instance::feasible_count(JobIndex j) const {
  if (kind_ == Kind::uniform) return machines_;
  std::size_t count = 0;
  for (MachineIndex i = 0; i < machines_; ++i) count += feasible(i, j) ? 1 : 0;
  return count;
}

bool Instance::restricted_structure() const {
  if (kind_ == Kind::uniform) return false;
  for (JobIndex j = 0; j < jobs_; ++j) {
    std::optional<Time> seen;
    for (MachineIndex i = 0; i < machines_; ++i) {
      const Entry& e = entry(i, j);
      if (!e) continue;
      if (seen && *seen != *e) return false;
      seen = e;
    }
  }
  return true;
}

TimeMatrix Instance::matrix() const {
  TimeMatrix rows(machines_, std::vector<Entry>(jobs_));
  for (MachineIndex i = 0; i < machines_; ++i) {
    for (JobIndex j = 0; j < jobs_; ++j) rows[i][j] = entry(i, j);
  }
  return rows;
}

void check_assignment(const Instance& inst, const Assignment& a) {
  if (a.size() != inst.jobs()) {
    fail(ErrorKind::InvalidInput, "assignment covers " + std::to_string(a.size()) + " jobs, instance has " +
                                      std::to_string(inst.jobs()));
  }
  for (JobIndex j = 0; j < a.size(); ++j) {
    if (a[j] >= inst.machines()) {
      fail(ErrorKind::InvalidInput, "job " + std::to_string(j) + " assigned to unknown machine");
    }
    if (!inst.feasible(a[j], j)) {
      fail(ErrorKind::InfeasiblePairAssigned,
           "job " + std::to_string(j) + " on machine " + std::to_string(a[j]));
    }
  }
}

LoadProfile load_profile(const Instance& inst, const Assignment& a) {
  check_assignment(inst, a);
  LoadProfile profile;
  profile.load.assign(inst.machines(), Rational(0));
  for (JobIndex j = 0; j < a.size(); ++j) profile.load[a[j]] += inst.rational_time(a[j], j);
  Rational total = 0;
  for (const auto& l : profile.load) {
    total += l;
    if (l > profile.makespan) profile.makespan = l;
  }
  profile.avg_load = total / Rational(inst.machines());
  return profile;
}

std::vector<Time> integral_loads(const Instance& inst, const Assignment& a) {
  check_assignment(inst, a);
  std::vector<Time> load(inst.machines(), 0);
  for (JobIndex j = 0; j < a.size(); ++j) load[a[j]] += inst.time(a[j], j);
  return load;
}

FeasibilityProfile feasibility_profile(const Instance& inst) {
  if (!inst.integral()) fail(ErrorKind::KindMismatch, "feasibility profile needs integral times");
  std::set<Time> values;
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      if (inst.entry(i, j)) values.insert(*inst.entry(i, j));
    }
  }
  FeasibilityProfile profile;
  profile.thresholds.assign(values.begin(), values.end());
  for (Time t : profile.thresholds) {
    std::size_t worst = inst.machines();
    for (JobIndex j = 0; j < inst.jobs(); ++j) {
      std::size_t count = 0;
      for (MachineIndex i = 0; i < inst.machines(); ++i) {
        const Entry& e = inst.entry(i, j);
        if (e && *e <= t) ++count;
      }
      worst = std::min(worst, count);
    }
    profile.phi.push_back(Rational(worst) / Rational(inst.machines()));
  }
  return profile;
}

Rational restricted_phi(const Instance& inst) {
  std::size_t worst = inst.machines();
  for (JobIndex j = 0; j < inst.jobs(); ++j) worst = std::min(worst, inst.feasible_count(j));
  return Rational(worst) / Rational(inst.machines());
}

}  // namespace makespan
