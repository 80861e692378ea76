#include "plancherel/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace plancherel {

void CorrelationQuery::validate() const {
    if (points.empty() || points.size() > 6)
        throw std::invalid_argument("correlation queries support 1..6 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j])
                throw std::invalid_argument("correlation query points must be pairwise distinct");
        }
    }
}

bool query_hits(const Trajectory& trajectory, const CorrelationQuery& query) {
    for (const auto& p : query.points) {
        if (!contains_point(trajectory.state_at(p.t), p.x)) return false;
    }
    return true;
}

EmpiricalEstimate empirical_rho(std::span<const Trajectory> trajectories,
                                const CorrelationQuery& query) {
    query.validate();
    EmpiricalEstimate out;
    out.n_samples = static_cast<long long>(trajectories.size());
    if (out.n_samples == 0) throw std::invalid_argument("empirical_rho needs trajectories");
    for (const auto& traj : trajectories) {
        bool coincided = false;
        for (const auto& p : query.points) {
            if (p.t < traj.t_begin || p.t > traj.t_end)
                throw std::invalid_argument("query time outside trajectory window");
            for (const auto& e : traj.events) coincided = coincided || e.time == p.t;
        }
        out.jump_coincidences += coincided;
        if (query_hits(traj, query)) ++out.hits;
    }
    out.frequency = static_cast<double>(out.hits) / static_cast<double>(out.n_samples);
    out.std_error = std::sqrt(out.frequency * (1.0 - out.frequency) /
                              static_cast<double>(out.n_samples));
    return out;
}

ComparisonReport compare(const CorrelationQuery& query, double exact,
                         const EmpiricalEstimate& estimate) {
    query.validate();
    ComparisonReport out;
    out.empirical = estimate.frequency;
    out.std_error = estimate.std_error;
    out.exact = exact;
    out.n_samples = estimate.n_samples;
    if (estimate.std_error > 0.0) {
        out.z_score = (estimate.frequency - exact) / estimate.std_error;
    } else if (std::abs(estimate.frequency - exact) >
               1.0 / static_cast<double>(std::max<long long>(estimate.n_samples, 1))) {
        throw std::runtime_error(
            "zero empirical variance with an exact value above sampling resolution");
    }
    return out;
}

std::pair<YoungDiagram, YoungDiagram> right_continuity_audit(const Trajectory& trajectory,
                                                             double t) {
    return {trajectory.state_before(t), trajectory.state_at(t)};
}

}  // namespace plancherel
