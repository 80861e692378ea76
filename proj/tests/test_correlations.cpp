#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "plancherel/correlations.hpp"
#include "plancherel/curves.hpp"
#include "plancherel/dynamics.hpp"
#include "plancherel/serialize.hpp"

using namespace plancherel;

namespace {
YoungDiagram yd(std::vector<std::int64_t> rows) { return YoungDiagram(std::move(rows)); }
HalfInt hi(std::int64_t k) { return HalfInt::plus_half(k); }

Trajectory crafted() {
    Trajectory t;
    t.t_begin = 0.0;
    t.t_end = 2.0;
    t.initial_state = yd({});
    t.events = {{0.5, yd({1})}, {1.0, yd({2})}, {1.5, yd({1})}};
    return t;
}
}  // namespace

TEST_CASE("right-continuous step evaluation") {
    const auto t = crafted();
    CHECK(t.state_at(0.0) == yd({}));
    CHECK(t.state_at(0.499) == yd({}));
    CHECK(t.state_at(0.5) == yd({1}));   // Lambda(t) = Lambda(t+)
    CHECK(t.state_before(0.5) == yd({}));
    CHECK(t.state_at(1.25) == yd({2}));
    CHECK(t.state_at(2.0) == yd({1}));
    CHECK_THROWS_AS(t.state_at(2.5), std::out_of_range);
    t.validate();
}

TEST_CASE("right-continuity audit") {
    const auto t = crafted();
    // Non-jump time: equal pair.
    const auto [before, after] = right_continuity_audit(t, 0.75);
    CHECK(before == after);
    // Jump time: differ by one box.
    const auto [b2, a2] = right_continuity_audit(t, 1.0);
    CHECK(b2 == yd({1}));
    CHECK(a2 == yd({2}));
    CHECK(std::abs(a2.size() - b2.size()) == 1);
}

TEST_CASE("query validation") {
    CorrelationQuery empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    CorrelationQuery dup{{{0.0, hi(0)}, {0.0, hi(0)}}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    CorrelationQuery seven{{{0.0, hi(0)},
                            {0.1, hi(0)},
                            {0.2, hi(0)},
                            {0.3, hi(0)},
                            {0.4, hi(0)},
                            {0.5, hi(0)},
                            {0.6, hi(0)}}};
    CHECK_THROWS_AS(seven.validate(), std::invalid_argument);
}

TEST_CASE("empirical frequencies on crafted trajectories") {
    std::vector<Trajectory> batch(10, crafted());
    // x = 1/2 is in L(state) iff the state has a first row of length 1;
    // between 0.5 and 1.0 the state is (1), membership holds.
    CorrelationQuery q{{{0.75, hi(0)}}};
    const auto est = empirical_rho(batch, q);
    CHECK(est.frequency == doctest::Approx(1.0));
    CHECK(est.hits == 10);
    // Never-hit query: position 5/2 needs a first row of length 3.
    CorrelationQuery q2{{{0.75, hi(2)}}};
    CHECK(empirical_rho(batch, q2).frequency == doctest::Approx(0.0));
    // Deep negative positions are almost always occupied.
    CorrelationQuery q3{{{0.75, hi(-5)}}};
    CHECK(empirical_rho(batch, q3).frequency == doctest::Approx(1.0));
    // Query outside the window is rejected.
    CorrelationQuery q4{{{5.0, hi(0)}}};
    CHECK_THROWS_AS(empirical_rho(batch, q4), std::invalid_argument);
    // Query exactly at a jump time is resolved right-continuously and flagged.
    CorrelationQuery q5{{{0.5, hi(0)}}};
    const auto at_jump = empirical_rho(batch, q5);
    CHECK(at_jump.frequency == doctest::Approx(1.0));
    CHECK(at_jump.jump_coincidences == 10);
    CHECK(empirical_rho(batch, q).jump_coincidences == 0);
}

TEST_CASE("comparison reports") {
    CorrelationQuery q{{{0.75, hi(0)}}};
    EmpiricalEstimate est;
    est.frequency = 0.48;
    est.std_error = 0.01;
    est.n_samples = 2500;
    const auto report = compare(q, 0.4749364595, est);
    CHECK(report.z_score == doctest::Approx((0.48 - 0.4749364595) / 0.01));
    // Zero variance with an exact value above resolution is an error.
    EmpiricalEstimate degenerate;
    degenerate.frequency = 0.0;
    degenerate.std_error = 0.0;
    degenerate.n_samples = 100;
    CHECK_THROWS_AS(compare(q, 0.5, degenerate), std::runtime_error);
}

TEST_CASE("stationary one-point density matches the kernel value") {
    const auto curve = AdmissibleCurve::hyperbola(1.0);
    const int n = 20000;
    long long hits = 0;
    for (int i = 0; i < n; ++i) {
        SplitRng rng(555, static_cast<std::uint64_t>(i));
        const auto traj = simulate(curve, 0.0, 0.25, std::nullopt, rng);
        hits += contains_point(traj.state_at(0.2), hi(0));
    }
    const double freq = static_cast<double>(hits) / n;
    const double exact = 0.4749364595077652;
    CHECK(std::abs(freq - exact) < 4.0 * std::sqrt(exact * (1 - exact) / n));
}

TEST_CASE("time reversal matches the transposed curve") {
    // On the line u+v=2, the axis transposition maps the curve to itself, so
    // the reversed process is the original one run backwards: the two-point
    // correlation at (t, x; s, y) must match the one at (-s, x; -t, y).
    const auto curve = AdmissibleCurve::diagonal_line(2.0);
    const auto rev = curve.reversed();
    // Sanity: reversing the symmetric line reproduces the same parametrization.
    for (double t : {-0.7, 0.1, 0.5}) {
        CHECK(rev.at(t).u == doctest::Approx(curve.at(t).u).epsilon(1e-12));
        CHECK(rev.at(t).v == doctest::Approx(curve.at(t).v).epsilon(1e-12));
    }
    // Lambda_rev(t) = Lambda(-t) in law, so each position keeps its own time
    // negated: rho2 under C at (t,x;s,y) equals rho2 under rev at (-t,x;-s,y).
    const double t_q = -0.2, s_q = 0.4;
    const HalfInt x = hi(0), y = hi(-1);
    const int n = 60000;
    long long hits_fwd = 0, hits_rev = 0;
    for (int i = 0; i < n; ++i) {
        SplitRng rng_f(811, static_cast<std::uint64_t>(i));
        const auto traj_f = simulate(curve, -0.8, 0.8, std::nullopt, rng_f);
        hits_fwd += contains_point(traj_f.state_at(t_q), x) &&
                    contains_point(traj_f.state_at(s_q), y);
        SplitRng rng_r(812, static_cast<std::uint64_t>(i));
        const auto traj_r = simulate(rev, -0.8, 0.8, std::nullopt, rng_r);
        hits_rev += contains_point(traj_r.state_at(-t_q), x) &&
                    contains_point(traj_r.state_at(-s_q), y);
    }
    const double pa = static_cast<double>(hits_fwd) / n;
    const double pb = static_cast<double>(hits_rev) / n;
    const double se = std::sqrt(pa * (1 - pa) / n + pb * (1 - pb) / n);
    CHECK(std::abs(pa - pb) < 4.0 * se);
    // Both agree with the extended-kernel determinant along the line.
    auto kernel = [&](double a, HalfInt xa, double b, HalfInt xb) {
        return extended_kernel_series(curve.theta_at(a), curve.theta_at(b), a, b, xa, xb).value;
    };
    const double det = kernel(t_q, x, t_q, x) * kernel(s_q, y, s_q, y) -
                       kernel(t_q, x, s_q, y) * kernel(s_q, y, t_q, x);
    CHECK(std::abs(pa - det) < 4.0 * std::sqrt(det * (1 - det) / n));
    CHECK(std::abs(pb - det) < 4.0 * std::sqrt(det * (1 - det) / n));
}

TEST_CASE("trajectory JSONL round trip") {
    const auto t = crafted();
    std::stringstream stream;
    write_trajectory_jsonl(stream, t, "hyperbola:theta=1");
    const auto back = read_trajectory_jsonl(stream);
    CHECK(back.t_begin == t.t_begin);
    CHECK(back.t_end == t.t_end);
    CHECK(back.initial_state == t.initial_state);
    REQUIRE(back.events.size() == t.events.size());
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        CHECK(back.events[i].time == t.events[i].time);
        CHECK(back.events[i].state == t.events[i].state);
    }
}

TEST_CASE("diagram and configuration JSON forms") {
    CHECK(to_json(yd({4, 2, 1})).dump() == "[4,2,1]");
    CHECK(to_json(yd({})).dump() == "[]");
    CHECK(diagram_from_json(nlohmann::json::parse("[4,2,1]")) == yd({4, 2, 1}));
    const auto config = point_config(yd({2, 1}));
    const auto j = to_json(config);
    CHECK(j["particles"][0] == "3/2");
    CHECK(j["holes"][0] == "-3/2");
    const auto back = point_config_from_json(j);
    CHECK(diagram_of(back) == yd({2, 1}));
}
