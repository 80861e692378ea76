#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "plancherel/curves.hpp"
#include "plancherel/rng.hpp"
#include "plancherel/trajectory.hpp"
#include "plancherel/young.hpp"

namespace plancherel {

struct RatePair {
    double down_rate = 0.0;  // -n v'(t)/v(t)
    double up_rate = 0.0;    // u'(t) v(t)
};

RatePair jump_rates(std::int64_t n, const AdmissibleCurve& curve, double t);

// Plancherel-distributed shape of size n (RS shape of a uniform permutation).
YoungDiagram sample_plancherel_shape(std::int64_t n, SplitRng& rng);
// Poissonized Plancherel sample: n ~ Poisson(theta), then a Plancherel shape.
YoungDiagram sample_M_theta(double theta, SplitRng& rng);

// One-step target draws from the current diagram.
YoungDiagram sample_down_target(const YoungDiagram& lambda, SplitRng& rng);
YoungDiagram sample_up_target(const YoungDiagram& lambda, SplitRng& rng);

// Exact trajectory of the inhomogeneous chain on [t0, t1] by thinning against
// a per-window dominating rate. Absent an explicit initial state, the start
// is drawn from the poissonized Plancherel measure at theta(t0).
Trajectory simulate(const AdmissibleCurve& curve, double t0, double t1,
                    const std::optional<YoungDiagram>& initial, SplitRng& rng);

// Kolmogorov-forward transition operator on {|lambda| <= n_cap} with an
// absorbing top layer; validation-only numerics.
struct TransitionMatrix {
    std::vector<YoungDiagram> states;
    std::unordered_map<YoungDiagram, int> index;
    std::vector<double> probabilities;  // row-major, states x states
    std::vector<double> defect;         // per-row mass absorbed above the cap
    double max_defect = 0.0;

    double entry(int from, int to) const {
        return probabilities[static_cast<std::size_t>(from) * states.size() +
                             static_cast<std::size_t>(to)];
    }
};

TransitionMatrix transition_matrix_small(const AdmissibleCurve& curve, double t, double s,
                                         int n_cap, double defect_tolerance = 1.0);

// Left action of the same operator on a distribution over {|lambda| <= n_cap};
// returns the evolved vector, with absorbed mass reported separately.
std::vector<double> evolve_distribution(const AdmissibleCurve& curve, double t, double s,
                                        std::vector<double> dist, int n_cap, double* defect_out);

// Deterministic state order shared by transition_matrix_small and
// evolve_distribution: sizes ascending, diagrams in enumeration order.
std::vector<YoungDiagram> truncated_state_space(int n_cap);

}  // namespace plancherel
