#include "plancherel/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "plancherel/poisson_rsk.hpp"

namespace plancherel {

RatePair jump_rates(std::int64_t n, const AdmissibleCurve& curve, double t) {
    if (n < 0) throw std::invalid_argument("jump rates need n >= 0");
    const auto p = curve.at(t);
    return {-static_cast<double>(n) * p.dv / p.v, p.du * p.v};
}

YoungDiagram sample_plancherel_shape(std::int64_t n, SplitRng& rng) {
    if (n < 0) throw std::invalid_argument("shape size must be nonnegative");
    // Fisher-Yates permutation, then RS insertion.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::int64_t i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform_int(i + 1))]);
    return rs_shape(Permutation{std::move(perm)});
}

YoungDiagram sample_M_theta(double theta, SplitRng& rng) {
    if (!(theta > 0.0)) throw std::invalid_argument("sample_M_theta needs theta > 0");
    return sample_plancherel_shape(rng.poisson(theta), rng);
}

namespace {

// Cumulative-sum inversion over corners in top-to-bottom order.
int pick_row(const std::vector<std::pair<int, double>>& dist, SplitRng& rng) {
    double total = 0.0;
    for (const auto& [row, p] : dist) total += p;
    const double draw = rng.next_unit() * total;
    double acc = 0.0;
    for (const auto& [row, p] : dist) {
        acc += p;
        if (draw <= acc) return row;
    }
    return dist.back().first;
}

}  // namespace

YoungDiagram sample_down_target(const YoungDiagram& lambda, SplitRng& rng) {
    if (lambda.empty()) throw std::invalid_argument("empty diagram has no down moves");
    return lambda.with_box_removed(pick_row(down_distribution(lambda), rng));
}

YoungDiagram sample_up_target(const YoungDiagram& lambda, SplitRng& rng) {
    return lambda.with_box_added(pick_row(up_distribution(lambda), rng));
}

Trajectory simulate(const AdmissibleCurve& curve, double t0, double t1,
                    const std::optional<YoungDiagram>& initial, SplitRng& rng) {
    if (!(t0 < t1)) throw std::invalid_argument("simulate needs t0 < t1");
    if (t0 < curve.t_begin() || t1 > curve.t_end())
        throw std::invalid_argument("time range outside curve domain");

    Trajectory out;
    out.t_begin = t0;
    out.t_end = t1;
    out.seed = rng.seed();
    out.stream = rng.stream_id();
    out.source = "dynamics";
    out.initial_state = initial ? *initial : sample_M_theta(curve.theta_at(t0), rng);

    YoungDiagram state = out.initial_state;
    double t = t0;
    const double theta_max = curve.sup_theta(t0, t1);
    while (t < t1) {
        // Window up to the next piece boundary; the dominating rate holds for
        // sizes up to a guard level, re-derived if the size approaches it.
        const double window_end = std::min(t1, curve.next_boundary_after(t));
        const std::int64_t n_guard =
            state.size() + static_cast<std::int64_t>(std::ceil(10.0 * std::sqrt(theta_max))) + 50;
        const double bound = static_cast<double>(n_guard) * curve.sup_death_factor(t, window_end) +
                             curve.sup_birth_rate(t, window_end);
        if (!(bound > 0.0)) {
            t = window_end;
            continue;
        }
        if (!std::isfinite(bound))
            throw std::invalid_argument("jump rates unbounded on the requested interval");
        bool redo_window = false;
        while (t < window_end && !redo_window) {
            t += rng.exponential() / bound;
            if (t >= window_end) {
                t = window_end;
                break;
            }
            const auto rates = jump_rates(state.size(), curve, t);
            const double draw = rng.next_unit() * bound;
            if (draw < rates.down_rate) {
                state = sample_down_target(state, rng);
                out.events.push_back({t, state});
            } else if (draw < rates.down_rate + rates.up_rate) {
                state = sample_up_target(state, rng);
                out.events.push_back({t, state});
                // The bound dominates only while the size stays below the
                // guard; recompute it as the size approaches.
                if (state.size() >= n_guard - 1) redo_window = true;
            }
            // otherwise: thinned proposal, no jump
        }
    }
    return out;
}

std::vector<YoungDiagram> truncated_state_space(int n_cap) {
    std::vector<YoungDiagram> states;
    for (int n = 0; n <= n_cap; ++n) {
        for (auto& d : enumerate_diagrams(n, std::max(n_cap, 30))) states.push_back(std::move(d));
    }
    return states;
}

namespace {

struct SparseGenerator {
    // Q(t) = death(t) * D + birth(t) * B on the truncated space, with the
    // birth flow out of the top layer absorbed.
    struct Edge {
        int from, to;
        double weight;
    };
    std::vector<Edge> down_edges, up_edges;
    std::vector<double> down_diag, up_diag;  // total outflow factors per state
    std::vector<double> up_absorb;           // per-state birth mass leaving the cap
    int n_states = 0;
};

SparseGenerator build_generator(const std::vector<YoungDiagram>& states,
                                const std::unordered_map<YoungDiagram, int>& index, int n_cap) {
    SparseGenerator gen;
    gen.n_states = static_cast<int>(states.size());
    gen.down_diag.assign(states.size(), 0.0);
    gen.up_diag.assign(states.size(), 0.0);
    gen.up_absorb.assign(states.size(), 0.0);
    for (int i = 0; i < gen.n_states; ++i) {
        const auto& lambda = states[static_cast<std::size_t>(i)];
        const double n = static_cast<double>(lambda.size());
        for (const auto& [row, p] : down_distribution(lambda)) {
            const int j = index.at(lambda.with_box_removed(row));
            gen.down_edges.push_back({i, j, n * p});
            gen.down_diag[static_cast<std::size_t>(i)] += n * p;
        }
        for (const auto& [row, p] : up_distribution(lambda)) {
            if (lambda.size() == n_cap) {
                gen.up_absorb[static_cast<std::size_t>(i)] += p;
            } else {
                const int j = index.at(lambda.with_box_added(row));
                gen.up_edges.push_back({i, j, p});
            }
            gen.up_diag[static_cast<std::size_t>(i)] += p;
        }
    }
    return gen;
}

// One RK4 step of d/ds [P | defect] = [P | defect] * Q(s) acting on row blocks.
class ForwardIntegrator {
public:
    ForwardIntegrator(const AdmissibleCurve& curve, const SparseGenerator& gen)
        : curve_(curve), gen_(gen) {}

    // rows: n_rows x n_states row-major; defect: n_rows.
    void integrate(std::vector<double>& rows, std::vector<double>& defect, int n_rows, double t,
                   double s) const {
        const double span = s - t;
        double max_down = 0.0, max_up = 0.0;
        for (double d : gen_.down_diag) max_down = std::max(max_down, d);
        for (double u : gen_.up_diag) max_up = std::max(max_up, u);
        const double max_rate = curve_.sup_death_factor(t, s) * max_down +
                                curve_.sup_birth_rate(t, s) * max_up;
        int steps = static_cast<int>(std::ceil(span * std::max(max_rate, 1.0) * 40.0));
        steps = std::clamp(steps, 32, 200000);
        const double h = span / steps;
        std::vector<double> k1(rows.size()), k2(rows.size()), k3(rows.size()), k4(rows.size());
        std::vector<double> dk1(defect.size()), dk2(defect.size()), dk3(defect.size()),
            dk4(defect.size());
        std::vector<double> tmp(rows.size());
        std::vector<double> dtmp(defect.size());
        for (int step = 0; step < steps; ++step) {
            const double a = t + step * h;
            apply(rows, defect, k1, dk1, n_rows, a);
            axpy(tmp, rows, k1, 0.5 * h);
            axpy(dtmp, defect, dk1, 0.5 * h);
            apply(tmp, dtmp, k2, dk2, n_rows, a + 0.5 * h);
            axpy(tmp, rows, k2, 0.5 * h);
            axpy(dtmp, defect, dk2, 0.5 * h);
            apply(tmp, dtmp, k3, dk3, n_rows, a + 0.5 * h);
            axpy(tmp, rows, k3, h);
            axpy(dtmp, defect, dk3, h);
            apply(tmp, dtmp, k4, dk4, n_rows, a + h);
            for (std::size_t i = 0; i < rows.size(); ++i)
                rows[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            for (std::size_t i = 0; i < defect.size(); ++i)
                defect[i] += h / 6.0 * (dk1[i] + 2.0 * dk2[i] + 2.0 * dk3[i] + dk4[i]);
        }
    }

private:
    static void axpy(std::vector<double>& out, const std::vector<double>& base,
                     const std::vector<double>& k, double factor) {
        out.resize(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + factor * k[i];
    }

    // out = rows * Q(a) (row-block form), dout = absorbed-mass derivative.
    void apply(const std::vector<double>& rows, const std::vector<double>& /*defect*/,
               std::vector<double>& out, std::vector<double>& dout, int n_rows, double a) const {
        const auto p = curve_.at(a);
        const double death = -p.dv / p.v;
        const double birth = p.du * p.v;
        const int ns = gen_.n_states;
        out.assign(static_cast<std::size_t>(n_rows) * ns, 0.0);
        dout.assign(static_cast<std::size_t>(n_rows), 0.0);
        for (int r = 0; r < n_rows; ++r) {
            const double* row = rows.data() + static_cast<std::size_t>(r) * ns;
            double* orow = out.data() + static_cast<std::size_t>(r) * ns;
            for (int i = 0; i < ns; ++i) {
                const double mass = row[i];
                if (mass == 0.0) continue;
                orow[i] -= mass * (death * gen_.down_diag[static_cast<std::size_t>(i)] +
                                   birth * gen_.up_diag[static_cast<std::size_t>(i)]);
                dout[static_cast<std::size_t>(r)] +=
                    mass * birth * gen_.up_absorb[static_cast<std::size_t>(i)];
            }
            for (const auto& e : gen_.down_edges)
                orow[e.to] += death * e.weight * row[e.from];
            for (const auto& e : gen_.up_edges)
                orow[e.to] += birth * e.weight * row[e.from];
        }
    }

    const AdmissibleCurve& curve_;
    const SparseGenerator& gen_;
};

}  // namespace

TransitionMatrix transition_matrix_small(const AdmissibleCurve& curve, double t, double s,
                                         int n_cap, double defect_tolerance) {
    if (!(s > t)) throw std::invalid_argument("transition matrix needs s > t");
    if (n_cap < 0 || n_cap > 12)
        throw std::invalid_argument("transition matrix supports n_cap <= 12");
    TransitionMatrix out;
    out.states = truncated_state_space(n_cap);
    for (int i = 0; i < static_cast<int>(out.states.size()); ++i)
        out.index.emplace(out.states[static_cast<std::size_t>(i)], i);
    const auto gen = build_generator(out.states, out.index, n_cap);
    const int ns = gen.n_states;
    out.probabilities.assign(static_cast<std::size_t>(ns) * ns, 0.0);
    for (int i = 0; i < ns; ++i)
        out.probabilities[static_cast<std::size_t>(i) * ns + i] = 1.0;
    out.defect.assign(static_cast<std::size_t>(ns), 0.0);
    ForwardIntegrator integrator(curve, gen);
    integrator.integrate(out.probabilities, out.defect, ns, t, s);
    out.max_defect = *std::max_element(out.defect.begin(), out.defect.end());
    if (out.max_defect > defect_tolerance)
        throw std::runtime_error("truncation defect exceeds the requested tolerance");
    return out;
}

std::vector<double> evolve_distribution(const AdmissibleCurve& curve, double t, double s,
                                        std::vector<double> dist, int n_cap, double* defect_out) {
    if (!(s > t)) throw std::invalid_argument("evolution needs s > t");
    const auto states = truncated_state_space(n_cap);
    if (dist.size() != states.size())
        throw std::invalid_argument("distribution size does not match the truncated state space");
    std::unordered_map<YoungDiagram, int> index;
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
        index.emplace(states[static_cast<std::size_t>(i)], i);
    const auto gen = build_generator(states, index, n_cap);
    std::vector<double> defect(1, 0.0);
    ForwardIntegrator integrator(curve, gen);
    integrator.integrate(dist, defect, 1, t, s);
    if (defect_out) *defect_out = defect[0];
    return dist;
}

}  // namespace plancherel
