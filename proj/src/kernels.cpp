#include "plancherel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace plancherel {

namespace {

constexpr double kSeriesTail = 1e-17;

long long table_order_for(double z, std::int64_t max_offset) {
    const double safety = z + 12.0 * std::cbrt(z + 1.0) + 80.0 + static_cast<double>(max_offset);
    return static_cast<long long>(std::ceil(safety));
}

// Geometric tail bound once both orders are past the turning point: the ratio
// |J_{m+1}/J_m| is below z/(2(m+1) - z) there.
double tail_ratio(double z, double order_x, double order_y, double damping) {
    const double rx = z / std::max(2.0 * (order_x + 1.0) - z, 1.0);
    const double ry = z / std::max(2.0 * (order_y + 1.0) - z, 1.0);
    return std::min(0.9, rx * ry * damping);
}

// sum over a in Z'_+ of e^{-a gap} J_{x +- a}(z_s) J_{y +- a}(z_t); the sign
// of the result (minus branch negates) is applied by the caller.
double series_sum(const BesselJTable& js, const BesselJTable& jt, double gap, bool plus_branch,
                  HalfInt x, HalfInt y, double* error_estimate) {
    const double zmax = std::max(js.z(), jt.z());
    const double turn = zmax + 8.0 * std::cbrt(zmax + 1.0) + 16.0;
    const long long a_cap = std::min(js.m_max(), jt.m_max()) +
                            std::max(std::abs(x.twice()), std::abs(y.twice())) / 2 + 2;
    double sum = 0.0;
    double last_term = 0.0;
    for (long long k = 0; k < a_cap; ++k) {
        // a = k + 1/2; the summed orders are integers.
        const std::int64_t ox = plus_branch ? x.minus_half() + (k + 1) : x.plus_half_int() - (k + 1);
        const std::int64_t oy = plus_branch ? y.minus_half() + (k + 1) : y.plus_half_int() - (k + 1);
        const double damping = std::exp(-(static_cast<double>(k) + 0.5) * gap);
        const double term = damping * js(ox) * jt(oy);
        sum += term;
        last_term = std::abs(term);
        const double progress_x = plus_branch ? static_cast<double>(ox) : -static_cast<double>(ox);
        const double progress_y = plus_branch ? static_cast<double>(oy) : -static_cast<double>(oy);
        if (progress_x > turn && progress_y > turn && last_term < kSeriesTail) break;
    }
    if (error_estimate) {
        const double ratio = tail_ratio(zmax, turn, turn, std::exp(-gap));
        *error_estimate = last_term * ratio / (1.0 - ratio) + 1e-15;
    }
    return sum;
}

}  // namespace

ContourSpec ContourSpec::preferred(double s_minus_t) {
    // Symmetric radii keep both exponential factors moderate; the factor 2
    // (resp. 1/2) keeps the pole of the coupling term well off the circles.
    ContourSpec spec;
    const double rho2 = s_minus_t >= 0.0 ? 2.0 * std::exp(-s_minus_t) : 0.5 * std::exp(-s_minus_t);
    spec.radius1 = spec.radius2 = std::sqrt(rho2);
    spec.nodes = 64;
    return spec;
}

bool ContourSpec::admissible(double s_minus_t) const {
    const double product = radius1 * radius2;
    if (s_minus_t >= 0.0) return product > std::exp(-s_minus_t);
    return product < std::exp(-s_minus_t);
}

DiscreteBesselKernel::DiscreteBesselKernel(double theta) : theta_(theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("kernel needs theta > 0");
    z_ = 2.0 * std::sqrt(theta);
    table_ = std::make_shared<BesselJTable>(z_, table_order_for(z_, 96));
}

KernelValue DiscreteBesselKernel::ratio(HalfInt x, HalfInt y) const {
    if (x == y) return series(x, y);  // diagonal via the series form
    const auto& j = *table_;
    KernelValue out;
    out.method = KernelMethod::ratio;
    const double num = j(x.minus_half()) * j(y.plus_half_int()) -
                       j(y.minus_half()) * j(x.plus_half_int());
    out.value = std::sqrt(theta_) * num / static_cast<double>(x - y);
    out.error_estimate = 1e-14 * std::sqrt(theta_);
    return out;
}

KernelValue DiscreteBesselKernel::series(HalfInt x, HalfInt y) const {
    KernelValue out;
    out.method = KernelMethod::series;
    out.value = series_sum(*table_, *table_, 0.0, true, x, y, &out.error_estimate);
    return out;
}

KernelValue extended_kernel_series(double theta_s, double theta_t, double s, double t, HalfInt x,
                                   HalfInt y) {
    if (!(theta_s > 0.0) || !(theta_t > 0.0))
        throw std::invalid_argument("extended kernel needs positive theta");
    const double zs = 2.0 * std::sqrt(theta_s);
    const double zt = 2.0 * std::sqrt(theta_t);
    const std::int64_t off = std::max(std::abs(x.twice()), std::abs(y.twice())) / 2 + 1;
    const BesselJTable js(zs, table_order_for(zs, off));
    const BesselJTable jt(zt, table_order_for(zt, off));
    const bool plus_branch = s >= t;
    KernelValue out;
    out.method = KernelMethod::series;
    const double sum = series_sum(js, jt, std::abs(s - t), plus_branch, x, y, &out.error_estimate);
    out.value = plus_branch ? sum : -sum;
    return out;
}

namespace {

std::complex<double> contour_sum(double theta_s, double theta_t, double s, double t,
                                 std::int64_t px, std::int64_t py, const ContourSpec& spec,
                                 int nodes) {
    // (1/2pi i) integral over a circle becomes the mean over nodes of f(w) w;
    // the coupling denominator depends on w1 w2 only through (j+k) mod N.
    const double rs = std::sqrt(theta_s);
    const double rt = std::sqrt(theta_t);
    const double shift = std::exp(s - t);
    const int n = nodes;
    std::vector<std::complex<double>> g1(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> g2(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> coupling(static_cast<std::size_t>(n));
    const double r1 = spec.radius1, r2 = spec.radius2;
    for (int j = 0; j < n; ++j) {
        const double phi = 2.0 * M_PI * j / n;
        const std::complex<double> w1 = std::polar(r1, phi);
        const std::complex<double> w2 = std::polar(r2, phi);
        // e^{sqrt(theta)(w - 1/w)} w^{-x-1/2} w  (the trailing w from dw = i w dphi)
        g1[static_cast<std::size_t>(j)] =
            std::exp(rs * (w1 - 1.0 / w1)) * std::polar(std::pow(r1, 1.0 - static_cast<double>(px)),
                                                        phi * (1.0 - static_cast<double>(px)));
        g2[static_cast<std::size_t>(j)] =
            std::exp(rt * (w2 - 1.0 / w2)) * std::polar(std::pow(r2, 1.0 - static_cast<double>(py)),
                                                        phi * (1.0 - static_cast<double>(py)));
        coupling[static_cast<std::size_t>(j)] = 1.0 / (shift * std::polar(r1 * r2, phi) - 1.0);
    }
    // sum_{j,k} g1_j g2_k coupling_{(j+k) mod n} via the circular convolution.
    std::complex<double> total = 0.0;
    for (int m = 0; m < n; ++m) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const int k = m - j;
            acc += g1[static_cast<std::size_t>(j)] * g2[static_cast<std::size_t>((k % n + n) % n)];
        }
        total += acc * coupling[static_cast<std::size_t>(m)];
    }
    return std::exp(0.5 * (s - t)) * total / (static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace

KernelValue extended_kernel_contour(double theta_s, double theta_t, double s, double t, HalfInt x,
                                    HalfInt y, ContourSpec spec) {
    if (!(theta_s > 0.0) || !(theta_t > 0.0))
        throw std::invalid_argument("extended kernel needs positive theta");
    if (!spec.admissible(s - t))
        throw std::invalid_argument("contour radii violate the containment condition");
    const std::int64_t px = x.plus_half_int();  // exponent x + 1/2
    const std::int64_t py = y.plus_half_int();
    int nodes = std::max(spec.nodes, 16);
    std::complex<double> prev = contour_sum(theta_s, theta_t, s, t, px, py, spec, nodes);
    for (; nodes <= 8192; nodes *= 2) {
        const std::complex<double> next =
            contour_sum(theta_s, theta_t, s, t, px, py, spec, nodes * 2);
        const double change = std::abs(next - prev);
        prev = next;
        if (change < 1e-11) {
            KernelValue out;
            out.method = KernelMethod::contour;
            out.value = prev.real();
            out.imag_residue = std::abs(prev.imag());
            out.error_estimate = change + out.imag_residue;
            out.nodes_used = nodes * 2;
            if (out.imag_residue > 1e-10)
                throw std::runtime_error("contour quadrature left an imaginary residue");
            return out;
        }
    }
    throw std::runtime_error("contour quadrature did not converge under node doubling");
}

KernelValue extended_kernel_contour(double theta_s, double theta_t, double s, double t, HalfInt x,
                                    HalfInt y) {
    return extended_kernel_contour(theta_s, theta_t, s, t, x, y, ContourSpec::preferred(s - t));
}

ExtendedKernelEvaluator::ExtendedKernelEvaluator(std::function<double(double)> theta_of_t)
    : theta_(std::move(theta_of_t)) {}

const BesselJTable& ExtendedKernelEvaluator::table_for(double theta) const {
    auto it = tables_.find(theta);
    if (it == tables_.end()) {
        const double z = 2.0 * std::sqrt(theta);
        it = tables_.emplace(theta, std::make_shared<BesselJTable>(z, table_order_for(z, 96)))
                 .first;
    }
    return *it->second;
}

double ExtendedKernelEvaluator::operator()(const SpaceTimePoint& a,
                                           const SpaceTimePoint& b) const {
    const auto& js = table_for(theta_(a.t));
    const auto& jt = table_for(theta_(b.t));
    const bool plus_branch = a.t >= b.t;
    const double sum = series_sum(js, jt, std::abs(a.t - b.t), plus_branch, a.x, b.x, nullptr);
    return plus_branch ? sum : -sum;
}

double rho_det(const std::function<double(const SpaceTimePoint&, const SpaceTimePoint&)>& kernel,
               std::span<const SpaceTimePoint> points) {
    const std::size_t n = points.size();
    if (n == 0) return 1.0;
    if (n > 12) throw std::invalid_argument("rho_det supports at most 12 points");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j])
                throw std::invalid_argument("correlation points must be pairwise distinct");
        }
    }
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = kernel(points[i], points[j]);
    }
    // LU with partial pivoting.
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
        }
        if (m[pivot * n + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            det = -det;
        }
        det *= m[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / m[col * n + col];
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
        }
    }
    return det;
}

}  // namespace plancherel
