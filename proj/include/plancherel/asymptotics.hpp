#pragma once

#include <cstdint>
#include <vector>

#include "plancherel/halfint.hpp"
#include "plancherel/rng.hpp"

namespace plancherel {

// Discrete sine kernel S_c(r) = sin(arccos(c/2) r) / (pi r), c in (-2, 2).
double sine_kernel(double c, long long r);

// Extended sine kernel: contour integral of e^{-h(w + 1/w - c)} w^{-r-1} from
// e^{-i phi} to e^{i phi}, phi = arccos(c/2), passing right of the origin for
// h >= 0 and left for h < 0.
double extended_sine_kernel(double c, double h, long long r);
// Same integral over a path through an explicit waypoint (must lie on the
// side of the origin dictated by the sign of h); Cauchy deformation check.
double extended_sine_kernel(double c, double h, long long r, double waypoint);

// Airy kernel: ratio form off the diagonal, integral form on it.
double airy_kernel(double x, double y);

// Extended Airy kernel: +int_0^inf e^{-tau a} Ai(x+a) Ai(y+a) da for tau >= 0,
// -int_0^inf e^{|tau| a -> damping} Ai(x-a) Ai(y-a) da for tau < 0
// (|tau| >= 1e-6 required on the negative branch).
double extended_airy_kernel(double tau, double x, double y);

enum class CurveFamily { hyperbola, diagonal_line };

// Bulk window around x0(theta) ~ c sqrt(theta): integer offsets, interior-time
// shifts tau_i / sqrt(theta).
struct BulkScalingSpec {
    double c = 0.0;
    double theta = 100.0;
    std::vector<int> offsets{0};
    std::vector<double> taus{0.0};
    CurveFamily family = CurveFamily::hyperbola;
};

// Edge window around 2 sqrt(theta(t)): real shifts x_i theta^{1/6}, times
// T + tau_i theta^{-1/6}.
struct EdgeScalingSpec {
    double theta = 100.0;
    std::vector<double> xs{0.0};
    std::vector<double> taus{0.0};
    CurveFamily family = CurveFamily::hyperbola;
};

struct ConvergenceEntry {
    double theta;
    int i, j;               // indices into the (tau, offset) grids
    double finite_value;    // finite-theta kernel entry (edge: scaled)
    double limit_value;     // limit kernel entry
    double abs_error;
};

struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    double det_finite = 1.0;
    double det_limit = 1.0;
    double det_error = 0.0;
    double max_abs_error = 0.0;
};

ConvergenceReport bulk_convergence_check(const BulkScalingSpec& spec);
ConvergenceReport edge_convergence_check(const EdgeScalingSpec& spec);

// Nearest lattice point, ties toward -infinity.
HalfInt nearest_half_int(double value);

// Monte Carlo samples of the rescaled first row L(tau) read off a Poisson
// realization swept along the chosen curve family.
struct FirstRowSamples {
    std::vector<double> taus;
    std::vector<std::vector<double>> samples;  // samples[i] across trajectories
    std::vector<double> mean, variance;
    std::vector<std::vector<double>> pair_covariance;  // across tau pairs
};

FirstRowSamples first_row_samples(CurveFamily family, double theta,
                                  const std::vector<double>& taus, std::uint64_t seed,
                                  std::uint64_t stream_base, int n_trajectories);

// Two-sample Kolmogorov-Smirnov statistic (used for curve-family stability).
double ks_statistic(std::vector<double> a, std::vector<double> b);

}  // namespace plancherel
