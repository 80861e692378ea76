#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "plancherel/dynamics.hpp"
#include "plancherel/poisson_rsk.hpp"
#include "plancherel/young.hpp"

using namespace plancherel;

namespace {

YoungDiagram yd(std::vector<std::int64_t> rows) { return YoungDiagram(std::move(rows)); }

// Patience-sorting oracle independent of the tableau code path.
int lis_oracle(const std::vector<int>& word) {
    std::vector<int> tails;
    for (int x : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

TEST_CASE("permutation of a planar configuration") {
    CHECK(permutation_of(PlanarConfiguration({{1.0, 2.0}})).images == std::vector<int>{1});
    CHECK(permutation_of(PlanarConfiguration({{1.0, 2.0}, {2.0, 1.0}})).images ==
          std::vector<int>{2, 1});
    CHECK(permutation_of(PlanarConfiguration({{1.0, 1.0}, {2.0, 3.0}, {3.0, 2.0}})).images ==
          std::vector<int>{1, 3, 2});
    CHECK_THROWS_AS(PlanarConfiguration({{1.0, 1.0}, {1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarConfiguration({{1.0, 2.0}, {3.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarConfiguration({{0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("RS shapes: examples") {
    CHECK(rs_shape(Permutation{{1, 2, 3, 4, 5}}) == yd({5}));
    CHECK(rs_shape(Permutation{{5, 4, 3, 2, 1}}) == yd({1, 1, 1, 1, 1}));
    CHECK(rs_shape(Permutation{{2, 1, 3}}) == yd({2, 1}));
    CHECK(rs_shape(Permutation{{}}) == yd({}));
}

TEST_CASE("first row of the RS shape equals the LIS length") {
    // Exhaustive over S_n, n <= 8.
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            const auto shape = rs_shape(Permutation{perm});
            CHECK(shape.row(0) == lis_oracle(perm));
            CHECK(shape.size() == n);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // Random large permutations.
    SplitRng rng(3, 0);
    for (int it = 0; it < 2000; ++it) {
        const int n = 1 + static_cast<int>(rng.uniform_int(200));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.uniform_int(i + 1))]);
        const auto shape = rs_shape(Permutation{perm});
        CHECK(shape.row(0) == lis_oracle(perm));
        CHECK(shape.row(0) == lis_length(perm));
    }
}

TEST_CASE("RS pushforward of the uniform measure is Plancherel (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        std::map<YoungDiagram, std::uint64_t> counts;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            ++counts[rs_shape(Permutation{perm})];
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& lambda : enumerate_diagrams(n)) {
            const auto d = dim(lambda).exact->to_u64();
            CHECK(counts[lambda] == d * d);
        }
    }
}

TEST_CASE("Poisson rectangle sampling") {
    SplitRng rng(5, 0);
    const int n = 20000;
    // Mean count = area.
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += static_cast<double>(sample_poisson_rect(2.0, 3.0, rng).size());
    CHECK(std::abs(total / n - 6.0) < 4.0 * std::sqrt(6.0 / n));
    // Empty probability for the unit square.
    long long empty = 0;
    for (int i = 0; i < n; ++i) empty += sample_poisson_rect(1.0, 1.0, rng).size() == 0;
    const double p = std::exp(-1.0);
    CHECK(std::abs(empty / static_cast<double>(n) - p) < 4.0 * std::sqrt(p * (1 - p) / n));
    // Counts in disjoint rectangles are uncorrelated.
    double sx = 0, sy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const auto config = sample_poisson_rect(2.0, 1.0, rng);
        int left = 0, right = 0;
        for (const auto& pt : config.points()) (pt.u < 1.0 ? left : right) += 1;
        sx += left;
        sy += right;
        sxy += static_cast<double>(left) * right;
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    CHECK(std::abs(cov) < 4.0 * std::sqrt(1.0 * 1.0 * 2.0 / n));
}

TEST_CASE("shape at a corner of the quadrant") {
    const PlanarConfiguration empty_config{};
    CHECK(lambda_at(empty_config, 1.0, 1.0) == yd({}));
    const PlanarConfiguration one({{0.5, 0.5}});
    CHECK(lambda_at(one, 1.0, 1.0) == yd({1}));
    CHECK(lambda_at(one, 0.4, 1.0) == yd({}));
    // Distribution over Poisson realizations is the poissonized measure.
    SplitRng rng(7, 0);
    const int n = 30000;
    std::map<YoungDiagram, long long> counts;
    for (int i = 0; i < n; ++i)
        ++counts[lambda_at(sample_poisson_rect(1.0, 1.0, rng), 1.0, 1.0)];
    for (const auto& lambda : {yd({}), yd({1}), yd({2}), yd({1, 1}), yd({2, 1}), yd({3})}) {
        const double p = poissonized_weight(1.0, lambda);
        const double freq = static_cast<double>(counts[lambda]) / n;
        CHECK(std::abs(freq - p) < 4.0 * std::sqrt(p * (1 - p) / n));
    }
}

TEST_CASE("shape process along a curve: crafted configurations") {
    // No points near the sweep: constant trajectory.
    const auto hyp = AdmissibleCurve::hyperbola(1.0);
    const PlanarConfiguration far({{50.0, 60.0}});
    const auto constant = shape_process_along(far, hyp, 0.0, 1.0);
    CHECK(constant.events.empty());
    CHECK(constant.initial_state == yd({}));

    // Horizontal piece sweeping over exactly one new point: one up event.
    const auto hline = AdmissibleCurve::horizontal_line(1.0, 0.5, 3.0);
    const PlanarConfiguration single({{1.0, 0.5}});
    const auto sweep = shape_process_along(single, hline, hline.t_begin(), hline.t_end());
    REQUIRE(sweep.events.size() == 1);
    CHECK(sweep.initial_state == yd({}));
    CHECK(sweep.events[0].state == yd({1}));
    CHECK(sweep.events[0].time == doctest::Approx(0.5 * std::log(1.0 / 0.5)).epsilon(1e-9));

    // Vertical piece: pure exits.
    const auto vline = AdmissibleCurve::vertical_line(2.0, 2.0, 0.25);
    const PlanarConfiguration pts({{0.5, 1.0}, {1.5, 0.5}});
    const auto down = shape_process_along(pts, vline, vline.t_begin(), vline.t_end());
    CHECK(down.initial_state.size() == 2);
    REQUIRE(down.events.size() == 2);
    CHECK(down.events[0].state.size() == 1);
    CHECK(down.events[1].state.size() == 0);
}

TEST_CASE("shape process matches from-scratch evaluation at random times") {
    SplitRng rng(11, 0);
    const auto curve = AdmissibleCurve::parse("line:u+v=4");
    for (int it = 0; it < 200; ++it) {
        PoissonRealization realization(1000, static_cast<std::uint64_t>(it));
        const double t0 = -1.0, t1 = 1.0;
        realization.ensure_box(curve.at(t1).u * 1.000001, curve.at(t0).v * 1.000001);
        const auto config = realization.config();
        const auto traj = shape_process_along(config, curve, t0, t1);
        traj.validate();
        for (int q = 0; q < 8; ++q) {
            const double t = t0 + (t1 - t0) * rng.next_unit();
            const auto p = curve.at(t);
            CHECK(traj.state_at(t) == lambda_at(config, p.u, p.v));
        }
        // Monotonicity structure: up events exactly when a point enters.
        std::int64_t prev = traj.initial_state.size();
        for (const auto& e : traj.events) {
            CHECK(std::abs(e.state.size() - prev) == 1);
            prev = e.state.size();
        }
    }
}

TEST_CASE("monotone sweeps on horizontal and vertical pieces") {
    for (int it = 0; it < 100; ++it) {
        PoissonRealization realization(2024, static_cast<std::uint64_t>(it));
        realization.ensure_box(3.0, 1.0);
        const auto config = realization.config();
        const auto hline = AdmissibleCurve::horizontal_line(1.0, 0.3, 3.0);
        const auto up = shape_process_along(config, hline, hline.t_begin(), hline.t_end());
        std::int64_t prev = up.initial_state.size();
        for (const auto& e : up.events) {
            CHECK(e.state.size() == prev + 1);
            prev = e.state.size();
        }
        const auto vline = AdmissibleCurve::vertical_line(3.0, 1.0, 0.1);
        PoissonRealization realization2(2025, static_cast<std::uint64_t>(it));
        realization2.ensure_box(3.0, 1.0);
        const auto down = shape_process_along(realization2.config(), vline, vline.t_begin(),
                                              vline.t_end());
        prev = down.initial_state.size();
        for (const auto& e : down.events) {
            CHECK(e.state.size() == prev - 1);
            prev = e.state.size();
        }
    }
}

TEST_CASE("lazy realization is consistent across box extensions") {
    PoissonRealization a(77, 1);
    a.ensure_box(1.0, 1.0);
    const auto first = a.points();
    a.ensure_box(2.0, 2.0);
    const auto& extended = a.points();
    // Every originally sampled point survives, and no duplicate coordinates appear.
    for (const auto& p : first) {
        const bool found = std::any_of(extended.begin(), extended.end(), [&](const PlanarPoint& q) {
            return q.u == p.u && q.v == p.v;
        });
        CHECK(found);
    }
    PlanarConfiguration validated(extended);  // throws on coordinate collisions
    CHECK(validated.size() >= first.size());
    // Extending by a staircase keeps counts Poisson with the right mean.
    double total = 0.0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) {
        PoissonRealization r(500 + i, 0);
        r.ensure_box(1.0, 2.0);
        r.ensure_box(2.0, 1.0);  // L-shaped union, area 3
        total += static_cast<double>(r.points().size());
    }
    CHECK(std::abs(total / n - 3.0) < 4.0 * std::sqrt(3.0 / n));
}

TEST_CASE("point-set CSV round trip") {
    const PlanarConfiguration config({{0.25, 1.5}, {1.0, 0.125}});
    std::stringstream stream;
    config.to_csv(stream);
    const auto back = PlanarConfiguration::from_csv(stream);
    REQUIRE(back.size() == 2);
    CHECK(back.points()[0].u == 0.25);
    CHECK(back.points()[1].v == 0.125);
}

TEST_CASE("dependence probe: control is null, statistic is significant") {
    SplitRng rng(123, 0);
    const auto probe = markov_violation_probe(rng, 200000);
    CHECK(std::abs(probe.control_stat) < 3.0 * probe.control_se);
    CHECK(std::abs(probe.statistic) >= 5.0 * probe.std_error);
    // The dependence has a definite sign: seeing the single rectangle point
    // inside the small box makes a second row at the big box less likely.
    CHECK(probe.statistic < 0.0);
    // Standard error scales like 1/sqrt(samples).
    SplitRng rng2(123, 1);
    const auto probe2 = markov_violation_probe(rng2, 50000);
    CHECK(probe2.std_error / probe.std_error == doctest::Approx(2.0).epsilon(0.25));
}
