#include "plancherel/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plancherel {

const YoungDiagram& Trajectory::state_at(double t) const& {
    if (t < t_begin - 1e-12 || t > t_end + 1e-12)
        throw std::out_of_range("query time outside trajectory window");
    // Last event with time <= t wins (right-continuous convention).
    auto it = std::upper_bound(events.begin(), events.end(), t,
                               [](double value, const TrajectoryEvent& e) { return value < e.time; });
    if (it == events.begin()) return initial_state;
    return std::prev(it)->state;
}

const YoungDiagram& Trajectory::state_before(double t) const& {
    if (t < t_begin - 1e-12 || t > t_end + 1e-12)
        throw std::out_of_range("query time outside trajectory window");
    auto it = std::lower_bound(events.begin(), events.end(), t,
                               [](const TrajectoryEvent& e, double value) { return e.time < value; });
    if (it == events.begin()) return initial_state;
    return std::prev(it)->state;
}

void Trajectory::validate() const {
    const YoungDiagram* prev = &initial_state;
    double prev_time = t_begin;
    for (const auto& event : events) {
        if (!(event.time > prev_time) && !(prev == &initial_state && event.time == t_begin))
            throw std::logic_error("trajectory event times must be strictly increasing");
        if (std::abs(event.state.size() - prev->size()) != 1)
            throw std::logic_error("trajectory events must change the size by one box");
        prev = &event.state;
        prev_time = event.time;
    }
}

}  // namespace plancherel
