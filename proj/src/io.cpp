#include "makespan/io.hpp"

#include "makespan/errors.hpp"

#include <fstream>
#include <sstream>

namespace makespan {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T value_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json::array({to_int64(numerator(r)), to_int64(denominator(r))});
}

Rational rational_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) {
    return make_rational(value_as<std::int64_t>(j[0], "rational numerator"),
                         value_as<std::int64_t>(j[1], "rational denominator"));
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, "expected a rational as [num, den]");
}

Json to_json(const Instance& inst) {
  Json j;
  j["kind"] = std::string(name(inst.kind()));
  j["m"] = inst.machines();
  j["n"] = inst.jobs();
  if (inst.kind() == Kind::uniform) {
    j["base_times"] = inst.base_times();
    Json speeds = Json::array();
    for (const auto& s : inst.speeds()) speeds.push_back(rational_to_json(s));
    j["speeds"] = std::move(speeds);
    return j;
  }
  Json rows = Json::array();
  for (MachineIndex i = 0; i < inst.machines(); ++i) {
    Json row = Json::array();
    for (JobIndex jb = 0; jb < inst.jobs(); ++jb) {
      const Entry& e = inst.entry(i, jb);
      row.push_back(e ? Json(*e) : Json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  j["p"] = std::move(rows);
  return j;
}

Instance instance_from_json(const Json& j) {
  const Kind kind = parse_kind(field<std::string>(j, "kind"));
  const auto m = field<std::size_t>(j, "m");
  const auto n = field<std::size_t>(j, "n");
  Instance inst;
  if (kind == Kind::uniform) {
    auto base = field<std::vector<Time>>(j, "base_times");
    std::vector<Rational> speeds;
    for (const auto& s : field<Json>(j, "speeds")) speeds.push_back(rational_from_json(s));
    inst = Instance::uniform(std::move(base), std::move(speeds));
  } else {
    TimeMatrix rows;
    for (const auto& row : field<Json>(j, "p")) {
      if (!row.is_array()) fail(ErrorKind::InvalidInput, "matrix rows must be arrays");
      std::vector<Entry> entries;
      for (const auto& cell : row) {
        if (cell.is_null()) {
          entries.emplace_back();
        } else {
          entries.emplace_back(value_as<Time>(cell, "processing time"));
        }
      }
      rows.push_back(std::move(entries));
    }
    inst = Instance::from_matrix(kind, std::move(rows));
  }
  if (inst.machines() != m || inst.jobs() != n) fail(ErrorKind::InvalidInput, "m or n disagrees with the data");
  return inst;
}

Json to_json(const Assignment& a) { return Json(a.machine_of()); }

Assignment assignment_from_json(const Json& j) {
  if (j.is_object()) return Assignment(field<std::vector<MachineIndex>>(j, "sigma"));
  return Assignment(value_as<std::vector<MachineIndex>>(j, "assignment"));
}

Json to_json(const GraphBalancingInstance& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.weight}));
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

GraphBalancingInstance graph_from_json(const Json& j) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorKind::InvalidInput, "edges are [u, v, weight]");
    edges.push_back({value_as<Vertex>(e[0], "edge endpoint"), value_as<Vertex>(e[1], "edge endpoint"),
                     value_as<Time>(e[2], "edge weight")});
  }
  return GraphBalancingInstance(field<std::size_t>(j, "vertices"), std::move(edges));
}

Json to_json(const TreeDecomposition& td) {
  Json edges = Json::array();
  for (const auto& [a, b] : td.tree_edges) edges.push_back(Json::array({a, b}));
  return Json{{"bags", td.bags}, {"tree_edges", std::move(edges)}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  TreeDecomposition td;
  td.bags = field<std::vector<std::vector<Vertex>>>(j, "bags");
  for (const auto& e : field<Json>(j, "tree_edges")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::InvalidInput, "tree edges are [i, j]");
    td.tree_edges.emplace_back(value_as<std::size_t>(e[0], "bag index"), value_as<std::size_t>(e[1], "bag index"));
  }
  return td;
}

Json to_json(const ReoptInput& input) {
  Json j;
  j["old"] = to_json(input.old_instance);
  j["new"] = to_json(input.new_instance);
  j["sigma0"] = input.sigma0.machine_of();
  j["job_ids_old"] = input.job_ids_old;
  j["job_ids_new"] = input.job_ids_new;
  if (!input.machine_ids_old.empty()) j["machine_ids_old"] = input.machine_ids_old;
  if (!input.machine_ids_new.empty()) j["machine_ids_new"] = input.machine_ids_new;
  if (input.speed_ratio_bound) j["speed_ratio_bound"] = rational_to_json(*input.speed_ratio_bound);
  return j;
}

ReoptInput reopt_from_json(const Json& j) {
  ReoptInput input;
  input.old_instance = instance_from_json(field<Json>(j, "old"));
  input.new_instance = instance_from_json(field<Json>(j, "new"));
  input.sigma0 = Assignment(field<std::vector<MachineIndex>>(j, "sigma0"));
  input.job_ids_old = field<std::vector<JobId>>(j, "job_ids_old");
  input.job_ids_new = field<std::vector<JobId>>(j, "job_ids_new");
  if (j.contains("machine_ids_old")) input.machine_ids_old = field<std::vector<MachineId>>(j, "machine_ids_old");
  if (j.contains("machine_ids_new")) input.machine_ids_new = field<std::vector<MachineId>>(j, "machine_ids_new");
  if (j.contains("speed_ratio_bound")) input.speed_ratio_bound = rational_from_json(j.at("speed_ratio_bound"));
  prior_placement(input);
  return input;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, "'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace makespan
