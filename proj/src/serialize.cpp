#include "plancherel/serialize.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace plancherel {

nlohmann::json to_json(const YoungDiagram& diagram) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto r : diagram.rows()) rows.push_back(r);
    return rows;
}

YoungDiagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("diagram JSON must be an array of rows");
    std::vector<std::int64_t> rows;
    for (const auto& r : j) rows.push_back(r.get<std::int64_t>());
    return YoungDiagram(std::move(rows));
}

nlohmann::json to_json(const PointConfiguration& config) {
    nlohmann::json particles = nlohmann::json::array();
    nlohmann::json holes = nlohmann::json::array();
    for (auto p : config.particles) particles.push_back(p.str());
    for (auto h : config.holes) holes.push_back(h.str());
    return {{"particles", particles}, {"holes", holes}};
}

PointConfiguration point_config_from_json(const nlohmann::json& j) {
    PointConfiguration out;
    for (const auto& p : j.at("particles")) out.particles.push_back(HalfInt::parse(p.get<std::string>()));
    for (const auto& h : j.at("holes")) out.holes.push_back(HalfInt::parse(h.get<std::string>()));
    return out;
}

void write_trajectory_jsonl(std::ostream& out, const Trajectory& trajectory,
                            const std::string& curve_descriptor) {
    nlohmann::json header{{"curve", curve_descriptor},
                          {"t_begin", trajectory.t_begin},
                          {"t_end", trajectory.t_end},
                          {"seed", trajectory.seed},
                          {"stream", trajectory.stream},
                          {"source", trajectory.source},
                          {"initial", to_json(trajectory.initial_state)}};
    if (trajectory.degenerate_crossings > 0)
        header["degenerate_crossings"] = trajectory.degenerate_crossings;
    out << header.dump() << '\n';
    for (const auto& event : trajectory.events) {
        nlohmann::json line{{"t", event.time}, {"state", to_json(event.state)}};
        out << line.dump() << '\n';
    }
}

Trajectory read_trajectory_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty trajectory stream");
    const auto header = nlohmann::json::parse(line);
    Trajectory out;
    out.t_begin = header.at("t_begin").get<double>();
    out.t_end = header.at("t_end").get<double>();
    out.seed = header.value("seed", std::uint64_t{0});
    out.stream = header.value("stream", std::uint64_t{0});
    out.source = header.value("source", std::string{"dynamics"});
    out.initial_state = diagram_from_json(header.at("initial"));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        out.events.push_back({j.at("t").get<double>(), diagram_from_json(j.at("state"))});
    }
    out.validate();
    return out;
}

}  // namespace plancherel
