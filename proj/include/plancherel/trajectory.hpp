#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plancherel/young.hpp"

namespace plancherel {

struct TrajectoryEvent {
    double time;
    YoungDiagram state;
};

// Step function on [t_begin, t_end] with values in diagrams; consecutive
// states differ by one box. Evaluation is right-continuous.
struct Trajectory {
    double t_begin = 0.0, t_end = 0.0;
    YoungDiagram initial_state;
    std::vector<TrajectoryEvent> events;  // strictly increasing times
    std::uint64_t seed = 0, stream = 0;
    std::string source;  // "dynamics" or "rsk"
    int degenerate_crossings = 0;

    // Right-continuous evaluation Lambda(t) = Lambda(t+) and the left limit.
    // Reference-returning, so calling on a temporary is disallowed.
    const YoungDiagram& state_at(double t) const&;
    const YoungDiagram& state_before(double t) const&;
    const YoungDiagram& state_at(double t) const&& = delete;
    const YoungDiagram& state_before(double t) const&& = delete;
    void validate() const;
};

}  // namespace plancherel
