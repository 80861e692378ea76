#pragma once

namespace plancherel {

// Airy function of the first kind and its derivative. Maclaurin series in
// extended precision on |x| <= 8, asymptotic expansions beyond; absolute
// accuracy ~1e-11 on the validated range |x| <= 20 and improving outside it.
double airy_ai(double x);
double airy_ai_prime(double x);

inline constexpr double kAirySwitchover = 8.0;

namespace detail {
// Individual evaluation paths, exposed for the switchover overlap check.
void airy_maclaurin_pair(double x, double& ai, double& aip);
void airy_asymptotic_pair(double x, double& ai, double& aip);
}  // namespace detail

}  // namespace plancherel
