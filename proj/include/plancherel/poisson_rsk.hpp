#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "plancherel/curves.hpp"
#include "plancherel/rng.hpp"
#include "plancherel/trajectory.hpp"
#include "plancherel/young.hpp"

namespace plancherel {

struct PlanarPoint {
    double u, v;
};

// Finite point set in the open quadrant with pairwise distinct u- and
// v-coordinates (almost sure for Poisson samples, validated on ingestion).
class PlanarConfiguration {
public:
    PlanarConfiguration() = default;
    explicit PlanarConfiguration(std::vector<PlanarPoint> points);

    std::span<const PlanarPoint> points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    static PlanarConfiguration from_csv(std::istream& in);
    void to_csv(std::ostream& out) const;

private:
    std::vector<PlanarPoint> points_;
};

struct Permutation {
    std::vector<int> images;  // images[i] = sigma(i+1), values 1..n
    int size() const { return static_cast<int>(images.size()); }
};

// sigma(i) = rank of the v-coordinate of the point whose u-coordinate has rank i.
Permutation permutation_of(const PlanarConfiguration& config);

// Common shape of the Robinson-Schensted insertion pair.
YoungDiagram rs_shape(const Permutation& sigma);
YoungDiagram rs_shape_of_points(std::span<const PlanarPoint> points);

// Longest increasing subsequence length by patience sorting (test oracle for
// the first row of rs_shape, and the fast path for first-row statistics).
int lis_length(std::span<const int> word);
int lis_of_points(std::span<const PlanarPoint> points);

// Shape of the configuration restricted to the rectangle (0,u] x (0,v].
YoungDiagram lambda_at(const PlanarConfiguration& config, double u, double v);

// Event-driven shape process along an admissible curve: events exactly at
// boundary crossings of the moving rectangle.
Trajectory shape_process_along(const PlanarConfiguration& config, const AdmissibleCurve& curve,
                               double t0, double t1);

// Poisson realization materialized lazily on corner boxes [0,u] x [0,v];
// repeated queries on one realization see one consistent point set.
class PoissonRealization {
public:
    PoissonRealization(std::uint64_t seed, std::uint64_t stream);

    void ensure_box(double u, double v);
    const std::vector<PlanarPoint>& points() const { return points_; }
    PlanarConfiguration config() const { return PlanarConfiguration(points_); }

private:
    SplitRng rng_;
    std::vector<PlanarPoint> points_;
    std::vector<std::pair<double, double>> corners_;  // maximal covered corner boxes
};

PlanarConfiguration sample_poisson_rect(double u, double v, SplitRng& rng);

// Monte Carlo probe of the dependence noted for northeast-ordered rectangles:
// conditional on the shape at (2,1) being a single box, the indicator of a
// single box at (1,1) and the indicator of at least two rows at (2,2) are
// correlated; disjoint-rectangle functionals serve as an independence control.
struct ProbeResult {
    double statistic = 0.0;   // conditional covariance estimate
    double std_error = 0.0;
    long long conditioned = 0;
    double control_stat = 0.0;  // unconditional disjoint-rectangle covariance
    double control_se = 0.0;
    long long samples = 0;
};

ProbeResult markov_violation_probe(SplitRng& rng, long long samples);

}  // namespace plancherel
