#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "plancherel/trajectory.hpp"
#include "plancherel/young.hpp"

namespace plancherel {

// Diagrams as arrays of row lengths ([] for the empty diagram); point
// configurations with half-integers as exact strings ("3/2").
nlohmann::json to_json(const YoungDiagram& diagram);
YoungDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PointConfiguration& config);
PointConfiguration point_config_from_json(const nlohmann::json& j);

// JSON-lines trajectory stream: a header object followed by one event per
// line {"t": ..., "state": [...]}.
void write_trajectory_jsonl(std::ostream& out, const Trajectory& trajectory,
                            const std::string& curve_descriptor);
Trajectory read_trajectory_jsonl(std::istream& in);

}  // namespace plancherel
