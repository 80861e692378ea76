#include "plancherel/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace plancherel {

namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
constexpr long double kAi0 = 0.3550280538878172392600631860041831763980L;
constexpr long double kAip0 = -0.2588194037928067984051835601892039634793L;
constexpr long double kSqrtPi = 1.7724538509055160272981674833411451827975L;

// Maclaurin pair: Ai = Ai(0) f + Ai'(0) g with
//   f = sum a_k x^{3k},     a_{k+1} = a_k / ((3k+2)(3k+3))
//   g = sum b_k x^{3k+1},   b_{k+1} = b_k / ((3k+3)(3k+4))
void maclaurin(long double x, long double& ai, long double& aip) {
    if (x == 0.0L) {
        ai = kAi0;
        aip = kAip0;
        return;
    }
    long double f = 1.0L, fp = 0.0L;   // f and f'
    long double g = x, gp = 1.0L;      // g and g'
    long double a = 1.0L, b = x;
    const long double x3 = x * x * x;
    for (int k = 0; k < 400; ++k) {
        const long double a_next = a * x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
        const long double b_next = b * x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
        f += a_next;
        fp += a_next * (3.0L * (k + 1)) / x;
        g += b_next;
        gp += b_next * (3.0L * (k + 1) + 1.0L) / x;
        a = a_next;
        b = b_next;
        if (std::abs(a) < 1e-30L && std::abs(b) < 1e-30L) break;
    }
    ai = kAi0 * f + kAip0 * g;
    aip = kAi0 * fp + kAip0 * gp;
}

// Poincare coefficients u_k (and v_k for the derivative).
const std::vector<long double>& u_coeffs() {
    static const std::vector<long double> u = [] {
        std::vector<long double> out{1.0L};
        for (int k = 1; k <= 60; ++k) {
            const long double prev = out.back();
            out.push_back(prev * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
                          ((2.0L * k - 1.0L) * 216.0L * k));
        }
        return out;
    }();
    return u;
}

const std::vector<long double>& v_coeffs() {
    static const std::vector<long double> v = [] {
        const auto& u = u_coeffs();
        std::vector<long double> out{1.0L};
        for (std::size_t k = 1; k < u.size(); ++k)
            out.push_back(-u[k] * (6.0L * k + 1.0L) / (6.0L * k - 1.0L));
        return out;
    }();
    return v;
}

// Truncate each asymptotic sum at its smallest term.
long double poincare_sum(const std::vector<long double>& coeff, long double zeta, int stride,
                         int offset, int sign_flip) {
    long double sum = 0.0L;
    long double last = 1e400L;
    int sgn = 1;
    for (std::size_t idx = static_cast<std::size_t>(offset); idx < coeff.size();
         idx += static_cast<std::size_t>(stride)) {
        const long double term = coeff[idx] / std::pow(zeta, static_cast<long double>(idx));
        if (std::abs(term) > last) break;  // divergent tail reached
        sum += sgn * term;
        last = std::abs(term);
        if (last < 1e-22L) break;
        if (sign_flip) sgn = -sgn;
    }
    return sum;
}

void asymptotic_positive(long double x, long double& ai, long double& aip) {
    const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
    // Alternate signs over consecutive k.
    long double su = 0.0L, sv = 0.0L, last = 1e400L;
    const auto& u = u_coeffs();
    const auto& v = v_coeffs();
    int sgn = 1;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const long double pw = std::pow(zeta, static_cast<long double>(k));
        const long double tu = u[k] / pw;
        if (std::abs(tu) > last) break;
        su += sgn * tu;
        sv += sgn * v[k] / pw;
        last = std::abs(tu);
        if (last < 1e-22L) break;
        sgn = -sgn;
    }
    const long double damp = std::exp(-zeta);
    const long double root4 = std::pow(x, 0.25L);
    ai = damp * su / (2.0L * kSqrtPi * root4);
    aip = -root4 * damp * sv / (2.0L * kSqrtPi);
}

void asymptotic_negative(long double x, long double& ai, long double& aip) {
    const long double z = -x;
    const long double zeta = 2.0L / 3.0L * z * std::sqrt(z);
    const long double arg = zeta - 0.25L * M_PIl;
    const long double c = std::cos(arg), s = std::sin(arg);
    // Even/odd splits with alternating signs within each split.
    const long double ue = poincare_sum(u_coeffs(), zeta, 2, 0, 1);
    const long double uo = poincare_sum(u_coeffs(), zeta, 2, 1, 1);
    const long double ve = poincare_sum(v_coeffs(), zeta, 2, 0, 1);
    const long double vo = poincare_sum(v_coeffs(), zeta, 2, 1, 1);
    const long double root4 = std::pow(z, 0.25L);
    ai = (c * ue + s * uo) / (kSqrtPi * root4);
    aip = root4 * (s * ve - c * vo) / kSqrtPi;
}

void airy_pair(double x, double& ai, double& aip) {
    if (!std::isfinite(x)) throw std::invalid_argument("Airy argument must be finite");
    long double a = 0.0L, ap = 0.0L;
    if (std::abs(x) <= kAirySwitchover) {
        maclaurin(static_cast<long double>(x), a, ap);
    } else if (x > 0.0) {
        if (x > 108.0) {  // e^{-zeta} underflows double anyway
            ai = 0.0;
            aip = 0.0;
            return;
        }
        asymptotic_positive(static_cast<long double>(x), a, ap);
    } else {
        asymptotic_negative(static_cast<long double>(x), a, ap);
    }
    ai = static_cast<double>(a);
    aip = static_cast<double>(ap);
}

}  // namespace

namespace detail {

void airy_maclaurin_pair(double x, double& ai, double& aip) {
    long double a = 0.0L, ap = 0.0L;
    maclaurin(static_cast<long double>(x), a, ap);
    ai = static_cast<double>(a);
    aip = static_cast<double>(ap);
}

void airy_asymptotic_pair(double x, double& ai, double& aip) {
    long double a = 0.0L, ap = 0.0L;
    if (x > 0.0) asymptotic_positive(static_cast<long double>(x), a, ap);
    else asymptotic_negative(static_cast<long double>(x), a, ap);
    ai = static_cast<double>(a);
    aip = static_cast<double>(ap);
}

}  // namespace detail

double airy_ai(double x) {
    double ai, aip;
    airy_pair(x, ai, aip);
    return ai;
}

double airy_ai_prime(double x) {
    double ai, aip;
    airy_pair(x, ai, aip);
    return aip;
}

}  // namespace plancherel
