#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "plancherel/bessel.hpp"
#include "plancherel/halfint.hpp"

namespace plancherel {

struct SpaceTimePoint {
    double t;   // interior time
    HalfInt x;  // lattice position in Z'
    friend bool operator==(const SpaceTimePoint& a, const SpaceTimePoint& b) {
        return a.t == b.t && a.x == b.x;
    }
};

enum class KernelMethod { series, contour, ratio };

struct KernelValue {
    double value = 0.0;
    KernelMethod method = KernelMethod::series;
    double error_estimate = 0.0;
    double imag_residue = 0.0;  // contour evaluations only
    int nodes_used = 0;         // accepted node count per circle (contour only)
};

// Quadrature contours for the double-integral form: two origin-centered
// circles. For s >= t the product of radii must exceed e^{t-s}; for s < t it
// must stay below it.
struct ContourSpec {
    double radius1 = 1.0;
    double radius2 = 1.0;
    int nodes = 64;  // starting node count per circle; doubled until stable

    static ContourSpec preferred(double s_minus_t);
    bool admissible(double s_minus_t) const;
};

// Equal-time kernel of the poissonized Plancherel measure at fixed theta.
class DiscreteBesselKernel {
public:
    explicit DiscreteBesselKernel(double theta);

    double theta() const { return theta_; }
    // Antisymmetric-ratio form; diagonal entries delegate to the series form.
    KernelValue ratio(HalfInt x, HalfInt y) const;
    // Series over Z'_+ with rigorous tail accounting.
    KernelValue series(HalfInt x, HalfInt y) const;
    double operator()(HalfInt x, HalfInt y) const { return series(x, y).value; }

private:
    double theta_, z_;
    std::shared_ptr<const BesselJTable> table_;
};

// Space-time kernel of the curve-driven process; depends on the curve only
// through theta(s), theta(t) and the interior-time lag.
KernelValue extended_kernel_series(double theta_s, double theta_t, double s, double t, HalfInt x,
                                   HalfInt y);
KernelValue extended_kernel_contour(double theta_s, double theta_t, double s, double t, HalfInt x,
                                    HalfInt y, ContourSpec spec);
KernelValue extended_kernel_contour(double theta_s, double theta_t, double s, double t, HalfInt x,
                                    HalfInt y);

// Shared Bessel tables for repeated evaluations along a theta profile.
class ExtendedKernelEvaluator {
public:
    explicit ExtendedKernelEvaluator(std::function<double(double)> theta_of_t);

    double operator()(const SpaceTimePoint& a, const SpaceTimePoint& b) const;

private:
    const BesselJTable& table_for(double theta) const;
    std::function<double(double)> theta_;
    mutable std::map<double, std::shared_ptr<BesselJTable>> tables_;
};

// det [K(p_i, p_j)] over pairwise distinct space-time points, n <= 12.
double rho_det(const std::function<double(const SpaceTimePoint&, const SpaceTimePoint&)>& kernel,
               std::span<const SpaceTimePoint> points);

}  // namespace plancherel
