#pragma once

#include <cstdint>
#include <vector>

namespace plancherel {

// Integer-order Bessel J_m(z) for z >= 0. Backward (Miller) recurrence with
// the normalization J_0 + 2 sum J_{2k} = 1; absolute accuracy ~1e-14 across
// the supported range. Negative orders via J_{-m} = (-1)^m J_m.
double bessel_j(long long m, double z);

// Power series sum_j (-1)^j (z/2)^{m+2j}/(j! (m+j)!) in extended precision;
// independent cross-check oracle, and the small-z evaluation path.
long double bessel_j_power_series(long long m, long double z);

// All orders 0..m_max at one argument; the workhorse behind the kernels.
class BesselJTable {
public:
    BesselJTable(double z, long long m_max);

    double operator()(long long m) const {
        if (m < 0) return (m & 1) ? -at(-m) : at(-m);
        return at(m);
    }
    double z() const { return z_; }
    long long m_max() const { return static_cast<long long>(values_.size()) - 1; }

private:
    double at(long long m) const {
        return m < static_cast<long long>(values_.size())
                   ? values_[static_cast<std::size_t>(m)]
                   : 0.0;  // beyond the table the true value is below 1e-30
    }
    double z_;
    std::vector<double> values_;
};

inline constexpr long long kBesselMaxOrder = 10000;
inline constexpr double kBesselMaxArgument = 1000.0;

}  // namespace plancherel
