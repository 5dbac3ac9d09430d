#pragma once

#include "makespan/graph_balancing.hpp"
#include "makespan/instance.hpp"
#include "makespan/reopt.hpp"

#include <json.hpp>

#include <string>

namespace makespan {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const Assignment& a);
// Accepts a bare array or {"sigma": [...]}.
Assignment assignment_from_json(const Json& j);

Json to_json(const GraphBalancingInstance& g);
GraphBalancingInstance graph_from_json(const Json& j);

Json to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j);

Json to_json(const ReoptInput& input);
ReoptInput reopt_from_json(const Json& j);

Json rational_to_json(const Rational& r);  // [num, den]
Rational rational_from_json(const Json& j);  // [num, den], integer or "a/b"

// Throws InvalidInput on I/O or parse errors.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);  // compact, newline-terminated

}  // namespace makespan
