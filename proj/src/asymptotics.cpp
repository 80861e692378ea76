#include "plancherel/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "plancherel/airy.hpp"
#include "plancherel/curves.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/poisson_rsk.hpp"
#include "plancherel/quadrature.hpp"

namespace plancherel {

double sine_kernel(double c, long long r) {
    if (!(c > -2.0 && c < 2.0)) throw std::invalid_argument("sine kernel needs c in (-2, 2)");
    const double phi = std::acos(c / 2.0);
    if (r == 0) return phi / M_PI;
    return std::sin(phi * static_cast<double>(r)) / (M_PI * static_cast<double>(r));
}

namespace {

std::complex<double> sine_contour_once(double c, double h, long long r, int nodes,
                                       double waypoint) {
    // Two straight segments e^{-i phi} -> p -> e^{i phi}; p on the side of the
    // origin dictated by the sign of h.
    const double phi = std::acos(c / 2.0);
    const std::complex<double> a = std::polar(1.0, -phi);
    const std::complex<double> b = std::polar(1.0, phi);
    const std::complex<double> p = waypoint;
    auto integrand = [&](const std::complex<double>& w) {
        return std::exp(-h * (w + 1.0 / w - c)) * std::pow(w, static_cast<double>(-r - 1));
    };
    auto segment = [&](std::complex<double> from, std::complex<double> to) {
        const auto& rule = gauss_legendre(nodes);
        std::complex<double> sum = 0.0;
        const std::complex<double> mid = 0.5 * (from + to), half = 0.5 * (to - from);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
        return sum * half;
    };
    const std::complex<double> total = segment(a, p) + segment(p, b);
    return total / std::complex<double>(0.0, 2.0 * M_PI);
}

}  // namespace

double extended_sine_kernel(double c, double h, long long r) {
    return extended_sine_kernel(c, h, r, h >= 0.0 ? 0.5 : -0.5);
}

double extended_sine_kernel(double c, double h, long long r, double waypoint) {
    if (!(c > -2.0 && c < 2.0)) throw std::invalid_argument("sine kernel needs c in (-2, 2)");
    if ((h >= 0.0 && waypoint <= 0.0) || (h < 0.0 && waypoint >= 0.0))
        throw std::invalid_argument("waypoint must avoid the origin on the correct side");
    std::complex<double> prev = sine_contour_once(c, h, r, 200, waypoint);
    for (int nodes = 400; nodes <= 3200; nodes *= 2) {
        const std::complex<double> next = sine_contour_once(c, h, r, nodes, waypoint);
        const double change = std::abs(next - prev);
        prev = next;
        if (change < 1e-12) {
            if (std::abs(prev.imag()) > 1e-10)
                throw std::runtime_error("extended sine kernel left an imaginary residue");
            return prev.real();
        }
    }
    throw std::runtime_error("extended sine kernel quadrature did not converge");
}

namespace {

// Panel quadrature of e^{-tau a} Ai(x+a) Ai(y+a) over [0, cut]; panel width
// shrinks with the local oscillation frequency on the negative axis.
double airy_product_integral(double tau, double x, double y, bool reflected) {
    const double lo = std::min(x, y);
    double cut;
    if (!reflected) {
        // Ai decays super-exponentially; stop once both arguments pass 24.
        cut = std::max(1.0, 24.0 - lo);
    } else {
        // Amplitude decays like a^{-1/4}; the exponential damping must do the
        // work. e^{-tau a} a^{-1/2} / pi below 1e-13.
        cut = (30.0 + std::log1p(1.0 / tau)) / tau;
    }
    double total = 0.0;
    double a = 0.0;
    while (a < cut) {
        const double deepest = reflected ? std::max(a - lo, 1.0) : 1.0;
        const double width = std::min(cut - a, std::max(0.25, 1.5 / std::sqrt(deepest)));
        total += integrate_panel(
            [&](double s) {
                const double arg_x = reflected ? x - s : x + s;
                const double arg_y = reflected ? y - s : y + s;
                return std::exp(-tau * s) * airy_ai(arg_x) * airy_ai(arg_y);
            },
            a, a + width, 24);
        a += width;
    }
    return total;
}

}  // namespace

double airy_kernel(double x, double y) {
    if (std::abs(x - y) < 1e-8) {
        const double mid = 0.5 * (x + y);
        return airy_product_integral(0.0, mid, mid, false);
    }
    return (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
}

double extended_airy_kernel(double tau, double x, double y) {
    if (tau == 0.0) return airy_product_integral(0.0, x, y, false);
    if (tau > 0.0) return airy_product_integral(tau, x, y, false);
    if (tau > -1e-6)
        throw std::invalid_argument("negative-tau branch requires |tau| >= 1e-6");
    return -airy_product_integral(-tau, x, y, true);
}

HalfInt nearest_half_int(double value) {
    const double k = std::floor(value - 0.5);
    const double lo = k + 0.5, hi = k + 1.5;
    const double pick = (value - lo) <= (hi - value) ? lo : hi;
    return HalfInt::from_twice(static_cast<std::int64_t>(std::llround(2.0 * pick)));
}

namespace {

AdmissibleCurve family_curve(CurveFamily family, double theta) {
    switch (family) {
        case CurveFamily::hyperbola:
            return AdmissibleCurve::hyperbola(theta);
        case CurveFamily::diagonal_line:
            return AdmissibleCurve::diagonal_line(2.0 * std::sqrt(theta));
    }
    throw std::logic_error("unknown curve family");
}

struct GridPoint {
    double t;        // interior time on the theta-anchored curve (T = 0)
    double tau;      // scaling-limit time
    double theta_t;  // theta at t along the family curve
    HalfInt pos;     // lattice position
    double scaled;   // realized scaled coordinate (edge only)
    int offset;      // integer offset (bulk only)
};

}  // namespace

ConvergenceReport bulk_convergence_check(const BulkScalingSpec& spec) {
    if (!(spec.c > -2.0 && spec.c < 2.0))
        throw std::invalid_argument("bulk scaling needs c in (-2, 2)");
    if (!(spec.theta > 0.0)) throw std::invalid_argument("bulk scaling needs theta > 0");
    const auto curve = family_curve(spec.family, spec.theta);
    const double root = std::sqrt(spec.theta);
    const HalfInt x0 = nearest_half_int(spec.c * root);

    std::vector<GridPoint> points;
    for (double tau : spec.taus) {
        for (int offset : spec.offsets) {
            GridPoint p;
            p.tau = tau;
            p.t = tau / root;
            p.theta_t = curve.theta_at(p.t);
            p.pos = x0 + offset;
            p.offset = offset;
            p.scaled = 0.0;
            points.push_back(p);
        }
    }

    ConvergenceReport report;
    const std::size_t n = points.size();
    std::vector<double> finite(n * n), limit(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& a = points[i];
            const auto& b = points[j];
            const double kf =
                extended_kernel_series(a.theta_t, b.theta_t, a.t, b.t, a.pos, b.pos).value;
            const double kl = a.tau == b.tau
                                  ? sine_kernel(spec.c, a.offset - b.offset)
                                  : extended_sine_kernel(spec.c, a.tau - b.tau,
                                                         a.offset - b.offset);
            finite[i * n + j] = kf;
            limit[i * n + j] = kl;
            ConvergenceEntry e{spec.theta, static_cast<int>(i), static_cast<int>(j), kf, kl,
                               std::abs(kf - kl)};
            report.max_abs_error = std::max(report.max_abs_error, e.abs_error);
            report.entries.push_back(e);
        }
    }
    if (n <= 12) {
        auto det_of = [n](const std::vector<double>& m) {
            std::vector<SpaceTimePoint> dummy(n);
            for (std::size_t i = 0; i < n; ++i)
                dummy[i] = {static_cast<double>(i), HalfInt::plus_half(static_cast<std::int64_t>(i))};
            return rho_det(
                [&](const SpaceTimePoint& a, const SpaceTimePoint& b) {
                    return m[static_cast<std::size_t>(a.t) * n + static_cast<std::size_t>(b.t)];
                },
                dummy);
        };
        report.det_finite = det_of(finite);
        report.det_limit = det_of(limit);
        report.det_error = std::abs(report.det_finite - report.det_limit);
    }
    return report;
}

ConvergenceReport edge_convergence_check(const EdgeScalingSpec& spec) {
    if (!(spec.theta > 0.0)) throw std::invalid_argument("edge scaling needs theta > 0");
    const auto curve = family_curve(spec.family, spec.theta);
    const double sixth = std::pow(spec.theta, 1.0 / 6.0);

    std::vector<GridPoint> points;
    for (double tau : spec.taus) {
        for (double xs : spec.xs) {
            GridPoint p;
            p.tau = tau;
            p.t = tau / sixth;
            p.theta_t = curve.theta_at(p.t);
            p.pos = nearest_half_int(2.0 * std::sqrt(p.theta_t) + xs * sixth);
            p.scaled = (p.pos.value() - 2.0 * std::sqrt(p.theta_t)) / sixth;
            p.offset = 0;
            points.push_back(p);
        }
    }

    ConvergenceReport report;
    const std::size_t n = points.size();
    std::vector<double> finite(n * n), limit(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& a = points[i];
            const auto& b = points[j];
            const double kf =
                sixth *
                extended_kernel_series(a.theta_t, b.theta_t, a.t, b.t, a.pos, b.pos).value;
            const double kl = a.tau == b.tau
                                  ? airy_kernel(a.scaled, b.scaled)
                                  : extended_airy_kernel(a.tau - b.tau, a.scaled, b.scaled);
            finite[i * n + j] = kf;
            limit[i * n + j] = kl;
            ConvergenceEntry e{spec.theta, static_cast<int>(i), static_cast<int>(j), kf, kl,
                               std::abs(kf - kl)};
            report.max_abs_error = std::max(report.max_abs_error, e.abs_error);
            report.entries.push_back(e);
        }
    }
    if (n <= 12) {
        std::vector<SpaceTimePoint> dummy(n);
        for (std::size_t i = 0; i < n; ++i)
            dummy[i] = {static_cast<double>(i), HalfInt::plus_half(static_cast<std::int64_t>(i))};
        auto det_of = [&](const std::vector<double>& m) {
            return rho_det(
                [&](const SpaceTimePoint& a, const SpaceTimePoint& b) {
                    return m[static_cast<std::size_t>(a.t) * n + static_cast<std::size_t>(b.t)];
                },
                dummy);
        };
        report.det_finite = det_of(finite);
        report.det_limit = det_of(limit);
        report.det_error = std::abs(report.det_finite - report.det_limit);
    }
    return report;
}

FirstRowSamples first_row_samples(CurveFamily family, double theta,
                                  const std::vector<double>& taus, std::uint64_t seed,
                                  std::uint64_t stream_base, int n_trajectories) {
    if (!(theta > 0.0)) throw std::invalid_argument("first_row_samples needs theta > 0");
    if (taus.empty() || n_trajectories <= 0)
        throw std::invalid_argument("first_row_samples needs taus and trajectories");
    const auto curve = family_curve(family, theta);
    const double sixth = std::pow(theta, 1.0 / 6.0);

    struct Window {
        double u, v, theta_t;
    };
    std::vector<Window> windows;
    double u_max = 0.0, v_max = 0.0;
    for (double tau : taus) {
        const auto p = curve.at(tau / sixth);
        windows.push_back({p.u, p.v, p.u * p.v});
        u_max = std::max(u_max, p.u);
        v_max = std::max(v_max, p.v);
    }

    FirstRowSamples out;
    out.taus = taus;
    out.samples.assign(taus.size(), std::vector<double>(static_cast<std::size_t>(n_trajectories)));
    for (int traj = 0; traj < n_trajectories; ++traj) {
        PoissonRealization realization(seed, stream_base + static_cast<std::uint64_t>(traj));
        realization.ensure_box(u_max, v_max);
        const auto& pts = realization.points();
        std::vector<PlanarPoint> inside;
        for (std::size_t w = 0; w < windows.size(); ++w) {
            inside.clear();
            for (const auto& p : pts) {
                if (p.u <= windows[w].u && p.v <= windows[w].v) inside.push_back(p);
            }
            const int first_row = lis_of_points(inside);
            out.samples[w][static_cast<std::size_t>(traj)] =
                (static_cast<double>(first_row) - 2.0 * std::sqrt(windows[w].theta_t)) / sixth;
        }
    }
    out.mean.resize(taus.size());
    out.variance.resize(taus.size());
    out.pair_covariance.assign(taus.size(), std::vector<double>(taus.size(), 0.0));
    for (std::size_t w = 0; w < taus.size(); ++w) {
        double m = 0.0;
        for (double v : out.samples[w]) m += v;
        m /= static_cast<double>(n_trajectories);
        out.mean[w] = m;
        double var = 0.0;
        for (double v : out.samples[w]) var += (v - m) * (v - m);
        out.variance[w] = var / std::max(1, n_trajectories - 1);
    }
    for (std::size_t a = 0; a < taus.size(); ++a) {
        for (std::size_t b = 0; b < taus.size(); ++b) {
            double cov = 0.0;
            for (int k = 0; k < n_trajectories; ++k)
                cov += (out.samples[a][static_cast<std::size_t>(k)] - out.mean[a]) *
                       (out.samples[b][static_cast<std::size_t>(k)] - out.mean[b]);
            out.pair_covariance[a][b] = cov / std::max(1, n_trajectories - 1);
        }
    }
    return out;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("KS statistic needs nonempty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    while (ia < a.size() || ib < b.size()) {
        const double x = ia < a.size() && (ib >= b.size() || a[ia] <= b[ib]) ? a[ia] : b[ib];
        while (ia < a.size() && a[ia] <= x) ++ia;
        while (ib < b.size() && b[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    return d;
}

}  // namespace plancherel
