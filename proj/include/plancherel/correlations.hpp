#pragma once

#include <span>
#include <vector>

#include "plancherel/kernels.hpp"
#include "plancherel/trajectory.hpp"

namespace plancherel {

// Dynamical correlation query: does L(Lambda(t_i)) contain x_i for all i?
struct CorrelationQuery {
    std::vector<SpaceTimePoint> points;  // pairwise distinct, n <= 6
    void validate() const;
};

struct EmpiricalEstimate {
    double frequency = 0.0;
    double std_error = 0.0;
    long long hits = 0;
    long long n_samples = 0;
    // Measure-zero bookkeeping: trajectories where a query time coincided
    // exactly with a jump time (resolved right-continuously).
    long long jump_coincidences = 0;
};

struct ComparisonReport {
    double empirical = 0.0;
    double std_error = 0.0;
    double exact = 0.0;
    double z_score = 0.0;
    long long n_samples = 0;
};

// Does the trajectory satisfy the query (right-continuous evaluation)?
bool query_hits(const Trajectory& trajectory, const CorrelationQuery& query);

EmpiricalEstimate empirical_rho(std::span<const Trajectory> trajectories,
                                const CorrelationQuery& query);

ComparisonReport compare(const CorrelationQuery& query, double exact,
                         const EmpiricalEstimate& estimate);

// (Lambda(t-), Lambda(t+)) pair; equal except at jump times.
std::pair<YoungDiagram, YoungDiagram> right_continuity_audit(const Trajectory& trajectory,
                                                             double t);

}  // namespace plancherel
