#pragma once

#include <vector>

namespace plancherel {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Cached rule of the given order (Newton iteration on Legendre polynomials).
const GaussLegendreRule& gauss_legendre(int n);

// Integral of f over [a, b] with one n-point panel.
template <class F>
double integrate_panel(F&& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

}  // namespace plancherel
