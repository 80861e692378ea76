#include "plancherel/poisson_rsk.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace plancherel {

namespace {

void check_distinct_coordinates(const std::vector<PlanarPoint>& pts) {
    std::vector<double> us, vs;
    us.reserve(pts.size());
    vs.reserve(pts.size());
    for (const auto& p : pts) {
        if (!(p.u > 0.0) || !(p.v > 0.0))
            throw std::invalid_argument("planar points must lie in the open quadrant");
        us.push_back(p.u);
        vs.push_back(p.v);
    }
    std::sort(us.begin(), us.end());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(us.begin(), us.end()) != us.end())
        throw std::invalid_argument("two points share a vertical line");
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("two points share a horizontal line");
}

// Row insertion of a value into an increasing-rows tableau; returns nothing,
// grows `rows` in place. Values must be pairwise distinct.
template <class T>
void tableau_insert(std::vector<std::vector<T>>& rows, T value) {
    for (auto& row : rows) {
        auto it = std::lower_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return;
        }
        std::swap(*it, value);
    }
    rows.push_back({value});
}

template <class T>
YoungDiagram shape_of_word(const std::vector<T>& word) {
    std::vector<std::vector<T>> rows;
    for (const T& x : word) tableau_insert(rows, x);
    std::vector<std::int64_t> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<std::int64_t>(row.size()));
    return YoungDiagram(std::move(lens));
}

std::vector<double> v_word_sorted_by_u(std::span<const PlanarPoint> points) {
    std::vector<const PlanarPoint*> order;
    order.reserve(points.size());
    for (const auto& p : points) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const PlanarPoint* a, const PlanarPoint* b) { return a->u < b->u; });
    std::vector<double> word;
    word.reserve(points.size());
    for (const auto* p : order) word.push_back(p->v);
    return word;
}

}  // namespace

PlanarConfiguration::PlanarConfiguration(std::vector<PlanarPoint> points)
    : points_(std::move(points)) {
    check_distinct_coordinates(points_);
}

PlanarConfiguration PlanarConfiguration::from_csv(std::istream& in) {
    std::vector<PlanarPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("point CSV rows must be 'u,v'");
        if (line.substr(0, comma) == "u") continue;  // header
        pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return PlanarConfiguration(std::move(pts));
}

void PlanarConfiguration::to_csv(std::ostream& out) const {
    out << "u,v\n";
    out.precision(17);
    for (const auto& p : points_) out << p.u << ',' << p.v << '\n';
}

Permutation permutation_of(const PlanarConfiguration& config) {
    const auto pts = config.points();
    const int n = static_cast<int>(pts.size());
    std::vector<int> by_u(static_cast<std::size_t>(n));
    std::iota(by_u.begin(), by_u.end(), 0);
    std::sort(by_u.begin(), by_u.end(), [&](int a, int b) { return pts[a].u < pts[b].u; });
    // v-ranks (1-based).
    std::vector<int> by_v(static_cast<std::size_t>(n));
    std::iota(by_v.begin(), by_v.end(), 0);
    std::sort(by_v.begin(), by_v.end(), [&](int a, int b) { return pts[a].v < pts[b].v; });
    std::vector<int> v_rank(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) v_rank[static_cast<std::size_t>(by_v[r])] = r + 1;
    Permutation sigma;
    sigma.images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma.images.push_back(v_rank[static_cast<std::size_t>(by_u[i])]);
    return sigma;
}

YoungDiagram rs_shape(const Permutation& sigma) { return shape_of_word(sigma.images); }

YoungDiagram rs_shape_of_points(std::span<const PlanarPoint> points) {
    return shape_of_word(v_word_sorted_by_u(points));
}

int lis_length(std::span<const int> word) {
    std::vector<int> piles;  // smallest tail of each pile
    for (int x : word) {
        auto it = std::lower_bound(piles.begin(), piles.end(), x);
        if (it == piles.end()) piles.push_back(x);
        else *it = x;
    }
    return static_cast<int>(piles.size());
}

int lis_of_points(std::span<const PlanarPoint> points) {
    const auto word = v_word_sorted_by_u(points);
    std::vector<double> piles;
    for (double x : word) {
        auto it = std::lower_bound(piles.begin(), piles.end(), x);
        if (it == piles.end()) piles.push_back(x);
        else *it = x;
    }
    return static_cast<int>(piles.size());
}

YoungDiagram lambda_at(const PlanarConfiguration& config, double u, double v) {
    if (!(u > 0.0) || !(v > 0.0)) throw std::invalid_argument("corner must be in the open quadrant");
    std::vector<PlanarPoint> inside;
    for (const auto& p : config.points()) {
        if (p.u <= u && p.v <= v) inside.push_back(p);
    }
    return rs_shape_of_points(inside);
}

Trajectory shape_process_along(const PlanarConfiguration& config, const AdmissibleCurve& curve,
                               double t0, double t1) {
    if (!(t0 < t1)) throw std::invalid_argument("shape process needs t0 < t1");
    if (t0 < curve.t_begin() || t1 > curve.t_end())
        throw std::invalid_argument("time range outside curve domain");
    const auto start = curve.at(t0);
    const auto finish = curve.at(t1);

    struct Crossing {
        double time;
        bool entering;
        PlanarPoint point;
    };
    std::vector<Crossing> crossings;
    std::vector<PlanarPoint> active;
    for (const auto& p : config.points()) {
        if (p.u > finish.u || p.v > start.v) continue;  // never inside during the sweep
        // Inside at time t iff u(t) >= p.u and v(t) >= p.v.
        const auto t_in = p.u <= start.u ? std::optional<double>(t0) : curve.first_u_at_least(p.u);
        if (!t_in || *t_in > t1) continue;
        const auto t_out = curve.last_v_at_least(p.v);
        if (!t_out || *t_out < *t_in) continue;
        if (*t_in <= t0 && *t_out >= t0) active.push_back(p);
        if (*t_in > t0 && *t_in <= t1) crossings.push_back({*t_in, true, p});
        if (*t_out >= t0 && *t_out < t1) crossings.push_back({*t_out, false, p});
    }

    Trajectory out;
    out.t_begin = t0;
    out.t_end = t1;
    out.source = "rsk";
    out.initial_state = rs_shape_of_points(active);

    // Simultaneous crossings are ordered deterministically by (u, v).
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.point.u != b.point.u) return a.point.u < b.point.u;
        return a.point.v < b.point.v;
    });
    for (std::size_t i = 1; i < crossings.size(); ++i) {
        if (crossings[i].time == crossings[i - 1].time) ++out.degenerate_crossings;
    }

    // Incremental insertion on entries (the entering point has the largest
    // u-coordinate so far); rebuild from scratch on exits.
    std::vector<std::vector<double>> tableau;
    auto rebuild = [&] {
        tableau.clear();
        for (double v : v_word_sorted_by_u(active)) tableau_insert(tableau, v);
    };
    rebuild();
    auto shape = [&] {
        std::vector<std::int64_t> lens;
        lens.reserve(tableau.size());
        for (const auto& row : tableau) lens.push_back(static_cast<std::int64_t>(row.size()));
        return YoungDiagram(std::move(lens));
    };

    for (const auto& crossing : crossings) {
        // A tie with the previous event gets nudged by the deterministic order;
        // event times in the output stay strictly increasing.
        double time = crossing.time;
        if (!out.events.empty() && time <= out.events.back().time)
            time = std::nextafter(out.events.back().time, t1);
        if (crossing.entering) {
            active.push_back(crossing.point);
            tableau_insert(tableau, crossing.point.v);
        } else {
            active.erase(std::find_if(active.begin(), active.end(), [&](const PlanarPoint& q) {
                return q.u == crossing.point.u && q.v == crossing.point.v;
            }));
            rebuild();
        }
        out.events.push_back({time, shape()});
    }
    return out;
}

PoissonRealization::PoissonRealization(std::uint64_t seed, std::uint64_t stream)
    : rng_(seed, stream) {}

void PoissonRealization::ensure_box(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0)) throw std::invalid_argument("box corner must be positive");
    // Uncovered part of [0,u] x [0,v] relative to the staircase of covered
    // corner boxes, decomposed into vertical strips.
    struct Strip {
        double u_lo, u_hi, v_lo, v_hi;
    };
    std::vector<Strip> strips;
    auto covered_height = [&](double x) {
        double h = 0.0;
        for (const auto& [cu, cv] : corners_) {
            if (cu >= x) h = std::max(h, cv);
        }
        return h;
    };
    std::vector<double> breaks{0.0, u};
    for (const auto& [cu, cv] : corners_) {
        if (cu < u) breaks.push_back(cu);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i], hi = breaks[i + 1];
        if (hi <= lo) continue;
        const double h = covered_height(0.5 * (lo + hi));
        if (h < v) strips.push_back({lo, hi, h, v});
    }
    for (const auto& s : strips) {
        const double area = (s.u_hi - s.u_lo) * (s.v_hi - s.v_lo);
        const std::int64_t count = rng_.poisson(area);
        for (std::int64_t k = 0; k < count; ++k) {
            points_.push_back({s.u_lo + rng_.next_unit() * (s.u_hi - s.u_lo),
                               s.v_lo + rng_.next_unit() * (s.v_hi - s.v_lo)});
        }
    }
    // Keep only maximal corner boxes.
    corners_.emplace_back(u, v);
    std::vector<std::pair<double, double>> maximal;
    for (const auto& c : corners_) {
        bool dominated = false;
        for (const auto& d : corners_) {
            if ((d.first > c.first && d.second >= c.second) ||
                (d.first >= c.first && d.second > c.second))
                dominated = true;
        }
        if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    corners_ = std::move(maximal);
}

PlanarConfiguration sample_poisson_rect(double u, double v, SplitRng& rng) {
    if (!(u > 0.0) || !(v > 0.0)) throw std::invalid_argument("rectangle sides must be positive");
    const std::int64_t count = rng.poisson(u * v);
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k)
        pts.push_back({u * rng.next_unit(), v * rng.next_unit()});
    return PlanarConfiguration(std::move(pts));
}

ProbeResult markov_violation_probe(SplitRng& rng, long long samples) {
    if (samples <= 0) throw std::invalid_argument("probe needs a positive sample count");
    // Rectangles a=(1,1), b=(2,1), c=(2,2). Conditional on exactly one point
    // in b: X = that point lies in a; Y = the shape at c has at least two rows
    // (equivalently, some pair of points in c is decreasing).
    long long m = 0;
    long long sx = 0, sy = 0, sxy = 0;
    long long c1 = 0, c2 = 0, c12 = 0;
    for (long long it = 0; it < samples; ++it) {
        const std::int64_t n = rng.poisson(4.0);
        // Points uniform on [0,2]^2; classify on the fly.
        int count_b = 0, count_a = 0;
        bool pair_decreasing = false;
        bool r1 = false, r2 = false;
        thread_local std::vector<PlanarPoint> pts;
        pts.clear();
        for (std::int64_t k = 0; k < n; ++k) {
            const double pu = 2.0 * rng.next_unit();
            const double pv = 2.0 * rng.next_unit();
            pts.push_back({pu, pv});
            if (pv <= 1.0) {
                ++count_b;
                if (pu <= 1.0) {
                    ++count_a;
                    r1 = true;
                }
            } else if (pu > 1.0) {
                r2 = true;
            }
        }
        // Control: disjoint boxes (0,1]x(0,1] and (1,2]x(1,2].
        c1 += r1;
        c2 += r2;
        c12 += (r1 && r2);
        if (count_b != 1) continue;
        // Decreasing pair within c: some point northwest of another. With a
        // single b-point at (bu, bv<=1), pairs are b-vs-strip or strip-vs-strip.
        for (std::size_t i = 0; i < pts.size() && !pair_decreasing; ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                if (pts[i].u < pts[j].u && pts[i].v > pts[j].v) {
                    pair_decreasing = true;
                    break;
                }
            }
        }
        const int x = count_a == 1 ? 1 : 0;
        const int y = pair_decreasing ? 1 : 0;
        ++m;
        sx += x;
        sy += y;
        sxy += x * y;
    }
    ProbeResult out;
    out.samples = samples;
    out.conditioned = m;
    if (m < 100) throw std::runtime_error("too few conditioning events for the probe");
    const double mx = static_cast<double>(sx) / static_cast<double>(m);
    const double my = static_cast<double>(sy) / static_cast<double>(m);
    const double mxy = static_cast<double>(sxy) / static_cast<double>(m);
    out.statistic = mxy - mx * my;
    // Moment-based standard error of the covariance of two Bernoullis: the
    // sample variance of (x - mx)(y - my) over m.
    double var = 0.0;
    {
        // E[((x-mx)(y-my))^2] from the joint cell counts.
        const double p11 = mxy;
        const double p10 = mx - mxy;
        const double p01 = my - mxy;
        const double p00 = 1.0 - p11 - p10 - p01;
        auto sq = [](double t) { return t * t; };
        const double m2 = p11 * sq((1 - mx) * (1 - my)) + p10 * sq((1 - mx) * (0 - my)) +
                          p01 * sq((0 - mx) * (1 - my)) + p00 * sq((0 - mx) * (0 - my));
        var = m2 - out.statistic * out.statistic;
    }
    out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(m));
    const double q1 = static_cast<double>(c1) / static_cast<double>(samples);
    const double q2 = static_cast<double>(c2) / static_cast<double>(samples);
    const double q12 = static_cast<double>(c12) / static_cast<double>(samples);
    out.control_stat = q12 - q1 * q2;
    {
        const double p11 = q12;
        const double p10 = q1 - q12;
        const double p01 = q2 - q12;
        const double p00 = 1.0 - p11 - p10 - p01;
        auto sq = [](double t) { return t * t; };
        const double m2 = p11 * sq((1 - q1) * (1 - q2)) + p10 * sq((1 - q1) * (0 - q2)) +
                          p01 * sq((0 - q1) * (1 - q2)) + p00 * sq((0 - q1) * (0 - q2));
        out.control_se =
            std::sqrt(std::max(m2 - out.control_stat * out.control_stat, 0.0) /
                      static_cast<double>(samples));
    }
    return out;
}

}  // namespace plancherel
