#include "plancherel/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace plancherel {

namespace {

constexpr double kRescaleThreshold = 1e200;
constexpr double kRescaleFactor = 1e-200;

// Downward recurrence J_{k-1} = (2k/z) J_k - J_{k+1} from a start order high
// enough that the seed direction has decayed; values are rescaled on overflow
// and fixed by the normalization identity at the end.
std::vector<double> miller_run(double z, long long m_max, long long start) {
    std::vector<double> vals(static_cast<std::size_t>(start) + 1, 0.0);
    std::vector<int> pending(static_cast<std::size_t>(start) + 1, 0);
    double next = 0.0;         // J_{k+1} (seed)
    double cur = 1e-300;       // J_k at k = start (arbitrary seed scale)
    int rescales = 0;
    vals[static_cast<std::size_t>(start)] = cur;
    pending[static_cast<std::size_t>(start)] = rescales;
    for (long long k = start; k > 0; --k) {
        const double prev = (2.0 * static_cast<double>(k) / z) * cur - next;
        next = cur;
        cur = prev;
        if (std::abs(cur) > kRescaleThreshold) {
            cur *= kRescaleFactor;
            next *= kRescaleFactor;
            ++rescales;
        }
        vals[static_cast<std::size_t>(k - 1)] = cur;
        pending[static_cast<std::size_t>(k - 1)] = rescales;
    }
    // Apply deferred rescales (entries stored before a rescale are smaller by
    // construction; extra factors flush them toward zero, which is exact
    // enough at the final normalized scale).
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (int r = pending[i]; r < rescales; ++r) vals[i] *= kRescaleFactor;
    }
    // Normalization: J_0 + 2 sum_{k>=1} J_{2k} = 1.
    double norm = vals[0];
    for (std::size_t k = 2; k < vals.size(); k += 2) norm += 2.0 * vals[k];
    for (auto& v : vals) v /= norm;
    vals.resize(static_cast<std::size_t>(m_max) + 1);
    return vals;
}

long long initial_start(double z, long long m_max) {
    const long long base = std::max<long long>(m_max, static_cast<long long>(std::ceil(z)));
    return base + 20 + static_cast<long long>(2.0 * std::sqrt(static_cast<double>(base) + 1.0));
}

std::vector<double> miller_adaptive(double z, long long m_max) {
    long long start = initial_start(z, m_max);
    std::vector<double> vals = miller_run(z, m_max, start);
    for (int iter = 0; iter < 12; ++iter) {
        const long long bigger = start + 20 + start / 4;
        std::vector<double> check = miller_run(z, m_max, bigger);
        double diff = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i)
            diff = std::max(diff, std::abs(vals[i] - check[i]));
        vals = std::move(check);
        start = bigger;
        if (diff < 1e-15) return vals;
    }
    throw std::runtime_error("Bessel backward recurrence failed to stabilize");
}

}  // namespace

long double bessel_j_power_series(long long m, long double z) {
    if (m < 0) return ((-m) & 1) ? -bessel_j_power_series(-m, z) : bessel_j_power_series(-m, z);
    if (z == 0.0L) return m == 0 ? 1.0L : 0.0L;
    // Leading coefficient (z/2)^m / m! in log space to dodge under/overflow.
    const long double half = z / 2.0L;
    long double log_lead = static_cast<long double>(m) * std::log(half) - std::lgamma(static_cast<long double>(m) + 1.0L);
    if (log_lead < -11500.0L) return 0.0L;  // below long double underflow
    long double term = std::exp(log_lead);
    long double sum = term;
    const long double zz = half * half;
    for (long long j = 1; j < 40000; ++j) {
        term *= -zz / (static_cast<long double>(j) * (static_cast<long double>(m) + j));
        sum += term;
        if (std::abs(term) < 1e-25L * (std::abs(sum) + 1e-30L) &&
            zz < static_cast<long double>(j) * (static_cast<long double>(m) + j))
            break;
    }
    return sum;
}

double bessel_j(long long m, double z) {
    if (std::abs(m) > kBesselMaxOrder)
        throw std::invalid_argument("Bessel order out of supported range");
    if (!(z >= 0.0) || z > kBesselMaxArgument)
        throw std::invalid_argument("Bessel argument out of supported range");
    if (m < 0) return (m & 1) ? -bessel_j(-m, z) : bessel_j(-m, z);
    if (z < 2.0) return static_cast<double>(bessel_j_power_series(m, static_cast<long double>(z)));
    return miller_adaptive(z, m)[static_cast<std::size_t>(m)];
}

BesselJTable::BesselJTable(double z, long long m_max) : z_(z) {
    if (!(z >= 0.0)) throw std::invalid_argument("Bessel argument must be nonnegative");
    if (m_max < 0) throw std::invalid_argument("Bessel table needs m_max >= 0");
    if (z == 0.0) {
        values_.assign(static_cast<std::size_t>(m_max) + 1, 0.0);
        values_[0] = 1.0;
        return;
    }
    if (z < 2.0) {
        values_.resize(static_cast<std::size_t>(m_max) + 1);
        for (long long m = 0; m <= m_max; ++m)
            values_[static_cast<std::size_t>(m)] =
                static_cast<double>(bessel_j_power_series(m, static_cast<long double>(z)));
        return;
    }
    values_ = miller_adaptive(z, m_max);
}

}  // namespace plancherel
