#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <unordered_map>

#include "plancherel/curves.hpp"
#include "plancherel/dynamics.hpp"
#include "plancherel/young.hpp"

using namespace plancherel;

namespace {
YoungDiagram yd(std::vector<std::int64_t> rows) { return YoungDiagram(std::move(rows)); }
}

TEST_CASE("theta along curves") {
    const auto hyp = AdmissibleCurve::hyperbola(4.0);
    CHECK(hyp.theta_at(-1.3) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(hyp.theta_at(2.0) == doctest::Approx(4.0).epsilon(1e-12));
    const auto line = AdmissibleCurve::diagonal_line(2.0);
    CHECK(line.theta_at(0.0) == doctest::Approx(1.0).epsilon(1e-12));  // u = v = 1
    const auto vline = AdmissibleCurve::vertical_line(2.0, 3.0, 0.1);
    CHECK(vline.theta_at(0.0) == doctest::Approx(6.0).epsilon(1e-12));  // v = 3 at start
    CHECK_THROWS_AS(vline.theta_at(100.0), std::out_of_range);
}

TEST_CASE("interior time parametrization") {
    // Hyperbola: u = sqrt(theta) e^t, v = sqrt(theta) e^{-t}, anchor t = 0.
    const auto hyp = AdmissibleCurve::hyperbola(3.0).interior_time(0.0);
    for (double t : {-1.0, 0.0, 0.7}) {
        const auto p = hyp.at(t);
        CHECK(p.u == doctest::Approx(std::sqrt(3.0) * std::exp(t)).epsilon(1e-12));
        CHECK(p.v == doctest::Approx(std::sqrt(3.0) * std::exp(-t)).epsilon(1e-12));
        CHECK(0.5 * (std::log(p.u) - std::log(p.v)) == doctest::Approx(t).epsilon(1e-12));
    }
    // Line u + v = 2 anchored at (1,1): t(u) = log(u/(2-u))/2.
    const auto line = AdmissibleCurve::diagonal_line(2.0).interior_time(0.0);
    for (double t : {-0.8, 0.3, 1.4}) {
        const auto p = line.at(t);
        CHECK(p.u + p.v == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(0.5 * std::log(p.u / (2.0 - p.u)) == doctest::Approx(t).epsilon(1e-10));
    }
    // Vertical line: t = -log(v)/2 + const.
    const auto vline = AdmissibleCurve::vertical_line(2.0, 3.0, 0.1);
    const auto p0 = vline.at(0.2);
    const auto p1 = vline.at(0.9);
    CHECK(0.5 * (std::log(p0.v) - std::log(p1.v)) == doctest::Approx(0.7).epsilon(1e-10));
    // Every interior-parametrized curve satisfies u'/u - v'/v = 2.
    for (const auto& curve : {hyp, line}) {
        for (double t : {-0.5, 0.0, 1.1}) {
            const auto p = curve.at(t);
            CHECK(p.du / p.u - p.dv / p.v == doctest::Approx(2.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("jump rates") {
    const auto hyp = AdmissibleCurve::hyperbola(3.0);
    const auto r = jump_rates(5, hyp, 0.4);
    CHECK(r.down_rate == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(r.up_rate == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(jump_rates(0, hyp, 0.0).down_rate == 0.0);
    // Horizontal line: pure birth at rate u' v0.
    const auto hline = AdmissibleCurve::horizontal_line(1.0, 0.5, 3.0);
    const auto rb = jump_rates(7, hline, 0.3);
    CHECK(rb.down_rate == 0.0);
    const auto p = hline.at(0.3);
    CHECK(rb.up_rate == doctest::Approx(p.du * 1.0).epsilon(1e-12));
    // Vertical line: pure death.
    const auto vline = AdmissibleCurve::vertical_line(1.0, 2.0, 0.5);
    CHECK(jump_rates(4, vline, 0.1).up_rate == 0.0);
    CHECK(jump_rates(4, vline, 0.1).down_rate == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("curve reversal swaps axes and reflects time") {
    const auto hyp = AdmissibleCurve::hyperbola(2.5);
    const auto hyp_rev = hyp.reversed();
    for (double t : {-0.7, 0.2}) {
        CHECK(hyp_rev.at(t).u == doctest::Approx(hyp.at(-t).v).epsilon(1e-12));
        CHECK(hyp_rev.at(t).v == doctest::Approx(hyp.at(-t).u).epsilon(1e-12));
    }
    const auto vline = AdmissibleCurve::vertical_line(2.0, 3.0, 1.0);
    const auto hline = vline.reversed();
    for (double t : {-0.5, -0.1}) {
        CHECK(hline.at(t).v == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(hline.at(t).u == doctest::Approx(vline.at(-t).v).epsilon(1e-12));
        CHECK(hline.at(t).du >= 0.0);
    }
    const auto line = AdmissibleCurve::diagonal_line(2.0);
    const auto line_rev = line.reversed();
    for (double t : {-0.4, 0.9}) {
        CHECK(line_rev.at(t).u == doctest::Approx(line.at(-t).v).epsilon(1e-12));
        CHECK(line_rev.at(t).v == doctest::Approx(line.at(-t).u).epsilon(1e-12));
    }
    // Reversal of an admissible curve stays admissible.
    line_rev.validate(2000);
    hline.validate(2000);
}

TEST_CASE("curve descriptors parse and validate") {
    const auto c1 = AdmissibleCurve::parse("hyperbola:theta=4");
    CHECK(c1.theta_at(1.0) == doctest::Approx(4.0));
    const auto c2 = AdmissibleCurve::parse("line:u+v=2");
    CHECK(c2.theta_at(0.0) == doctest::Approx(1.0));
    const auto c3 = AdmissibleCurve::parse("vline:u=2,v=[3,0.1]");
    CHECK(c3.at(c3.t_begin()).v == doctest::Approx(3.0));
    CHECK(c3.at(c3.t_end()).v == doctest::Approx(0.1).epsilon(1e-9));
    const auto c4 = AdmissibleCurve::parse("hline:v=1,u=[0.1,3]");
    CHECK(c4.at(c4.t_end()).u == doctest::Approx(3.0).epsilon(1e-9));
    const auto c5 = AdmissibleCurve::parse("piecewise:[vline:u=1,v=[2,1];hline:v=1,u=[1,2]]");
    CHECK(c5.at(c5.t_begin()).v == doctest::Approx(2.0));
    CHECK(c5.at(c5.t_end()).u == doctest::Approx(2.0).epsilon(1e-9));
    c5.validate(2000);
    CHECK_THROWS_AS(AdmissibleCurve::parse("spiral:r=1"), std::invalid_argument);
    CHECK_THROWS_AS(AdmissibleCurve::parse("hyperbola"), std::invalid_argument);
    // Discontinuous piecewise curves are rejected.
    CHECK_THROWS_AS(
        AdmissibleCurve::parse("piecewise:[vline:u=1,v=[2,1];hline:v=0.5,u=[1,2]]"),
        std::invalid_argument);
}

TEST_CASE("explicit piece reversal swaps axes") {
    auto eval = [](double s) {
        const double u = 1.0 + s;
        return CurvePoint{u, 2.0 / u, 1.0, -2.0 / (u * u)};
    };
    const auto curve = AdmissibleCurve::explicit_piece(
        eval, 0.0, 2.0, [](double, double b) { return 2.0 / (1.0 + b) * 2.0; },
        [](double, double b) { return 2.0 / (1.0 + b) * 2.0; }, "explicit-arc");
    const auto rev = curve.reversed();
    CHECK(rev.t_begin() == doctest::Approx(-2.0));
    for (double t : {-1.7, -0.9, -0.1}) {
        CHECK(rev.at(t).u == doctest::Approx(curve.at(-t).v).epsilon(1e-12));
        CHECK(rev.at(t).v == doctest::Approx(curve.at(-t).u).epsilon(1e-12));
        CHECK(rev.at(t).du >= 0.0);
        CHECK(rev.at(t).dv <= 0.0);
    }
    rev.validate(500);
    // Double reversal restores the original.
    const auto back = rev.reversed();
    for (double t : {0.3, 1.5}) {
        CHECK(back.at(t).u == doctest::Approx(curve.at(t).u).epsilon(1e-12));
        CHECK(back.at(t).dv == doctest::Approx(curve.at(t).dv).epsilon(1e-12));
    }
}

TEST_CASE("explicit pieces and interior reparametrization") {
    // Quarter of the parabola v = 1/u traced with a custom parameter.
    auto eval = [](double s) {
        const double u = 1.0 + s;
        return CurvePoint{u, 2.0 / u, 1.0, -2.0 / (u * u)};
    };
    const auto curve = AdmissibleCurve::explicit_piece(
        eval, 0.0, 2.0, [](double, double b) { return 1.0 / (1.0 + b) * 2.0; },
        [](double, double b) { return 2.0 / (1.0 + b) * 2.0; }, "explicit-hyperbola");
    curve.validate(500);
    const auto interior = curve.interior_time(0.0);
    CHECK(interior.at(0.0).u == doctest::Approx(1.0).epsilon(1e-9));
    // theta is invariant under reparametrization.
    CHECK(interior.theta_at(interior.t_begin()) == doctest::Approx(2.0).epsilon(1e-9));
    // Interior time is (ln u - ln v)/2 up to the anchor constant, here the
    // value at the anchor point (u, v) = (1, 2).
    const double anchor_const = 0.5 * std::log(1.0 / 2.0);
    const auto p = interior.at(0.5 * interior.t_end());
    CHECK(0.5 * (std::log(p.u) - std::log(p.v)) ==
          doctest::Approx(0.5 * interior.t_end() + anchor_const).epsilon(1e-8));
    CHECK(p.du / p.u - p.dv / p.v == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("sampling the poissonized measure") {
    SplitRng rng(11, 0);
    long long empty_count = 0;
    std::map<std::int64_t, long long> size_counts;
    const int n = 40000;
    for (int i = 0; i < n; ++i) {
        const auto lambda = sample_M_theta(1.0, rng);
        empty_count += lambda.empty();
        ++size_counts[lambda.size()];
    }
    const double p_empty = static_cast<double>(empty_count) / n;
    const double expect = std::exp(-1.0);
    CHECK(std::abs(p_empty - expect) < 4.0 * std::sqrt(expect * (1 - expect) / n));
    // Sizes follow Poisson(2) for theta = 2.
    SplitRng rng2(12, 0);
    std::map<std::int64_t, long long> sizes2;
    long long shape21 = 0, size3 = 0;
    for (int i = 0; i < n; ++i) {
        const auto lambda = sample_M_theta(2.0, rng2);
        ++sizes2[lambda.size()];
        if (lambda.size() == 3) {
            ++size3;
            if (lambda == yd({2, 1})) ++shape21;
        }
    }
    for (int k = 0; k <= 4; ++k) {
        const double pk = std::exp(-2.0) * std::pow(2.0, k) / std::tgamma(k + 1.0);
        const double freq = static_cast<double>(sizes2[k]) / n;
        CHECK(std::abs(freq - pk) < 4.0 * std::sqrt(pk * (1 - pk) / n));
    }
    // Conditional law given |lambda| = 3: shape (2,1) carries mass 2/3.
    const double cond = static_cast<double>(shape21) / static_cast<double>(size3);
    CHECK(std::abs(cond - 2.0 / 3.0) < 4.0 * std::sqrt((2.0 / 9.0) / static_cast<double>(size3)));
}

TEST_CASE("up-jump target law from (2,1)") {
    const auto dist = up_distribution(yd({2, 1}));
    REQUIRE(dist.size() == 3);
    // Rows top to bottom: add to row 0 -> (3,1), row 1 -> (2,2), row 2 -> (2,1,1).
    CHECK(dist[0].first == 0);
    CHECK(dist[0].second == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
    CHECK(dist[1].second == doctest::Approx(1.0 / 4.0).epsilon(1e-12));
    CHECK(dist[2].second == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
    // Monte Carlo agreement.
    SplitRng rng(13, 0);
    std::map<YoungDiagram, int> counts;
    const int n = 20000;
    for (int i = 0; i < n; ++i) ++counts[sample_up_target(yd({2, 1}), rng)];
    CHECK(std::abs(counts[yd({2, 2})] / static_cast<double>(n) - 0.25) <
          4.0 * std::sqrt(0.25 * 0.75 / n));
    CHECK(std::abs(counts[yd({3, 1})] / static_cast<double>(n) - 0.375) <
          4.0 * std::sqrt(0.375 * 0.625 / n));
}

TEST_CASE("pure-death simulation absorbs at the empty diagram") {
    const auto vline = AdmissibleCurve::vertical_line(1.0, 2.0, 2.0 * std::exp(-24.0));
    SplitRng rng(17, 0);
    for (int i = 0; i < 200; ++i) {
        const auto traj = simulate(vline, 0.0, 11.9, yd({3, 2, 1}), rng);
        CHECK(traj.state_at(11.9).empty());
        // Pure death: every event decreases the size.
        for (std::size_t e = 1; e < traj.events.size(); ++e)
            CHECK(traj.events[e].state.size() < traj.events[e - 1].state.size());
        traj.validate();
    }
}

TEST_CASE("stationary jump count has mean 2 theta T") {
    const double theta = 1.5, horizon = 2.0;
    const auto hyp = AdmissibleCurve::hyperbola(theta);
    SplitRng rng(19, 0);
    const int n = 20000;
    double total = 0.0, total_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto traj = simulate(hyp, 0.0, horizon, std::nullopt, rng);
        const double jumps = static_cast<double>(traj.events.size());
        total += jumps;
        total_sq += jumps * jumps;
    }
    const double mean = total / n;
    const double var = total_sq / n - mean * mean;
    const double expect = 2.0 * theta * horizon;
    CHECK(std::abs(mean - expect) < 4.0 * std::sqrt(var / n));
}

TEST_CASE("stationary invariance: chi-square over small diagrams") {
    // Empirical law of the state at t1, started from the invariant measure,
    // against the poissonized weights: categories are all diagrams with at
    // most 4 boxes plus a binned remainder.
    const double theta = 1.0;
    const auto hyp = AdmissibleCurve::hyperbola(theta);
    std::vector<YoungDiagram> cats;
    for (int n = 0; n <= 4; ++n) {
        for (auto& d : enumerate_diagrams(n)) cats.push_back(std::move(d));
    }
    std::unordered_map<YoungDiagram, std::size_t> index;
    for (std::size_t i = 0; i < cats.size(); ++i) index.emplace(cats[i], i);
    const int n_traj = 100000;
    std::vector<long long> counts(cats.size() + 1, 0);
    for (int i = 0; i < n_traj; ++i) {
        SplitRng rng(907, static_cast<std::uint64_t>(i));
        const auto traj = simulate(hyp, 0.0, 0.7, std::nullopt, rng);
        const auto it = index.find(traj.state_at(0.7));
        ++counts[it == index.end() ? cats.size() : it->second];
    }
    double chi2 = 0.0;
    double rest = 1.0;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        const double expected = poissonized_weight(theta, cats[i]) * n_traj;
        rest -= poissonized_weight(theta, cats[i]);
        chi2 += (counts[i] - expected) * (counts[i] - expected) / expected;
    }
    chi2 += (counts[cats.size()] - rest * n_traj) * (counts[cats.size()] - rest * n_traj) /
            (rest * n_traj);
    // 13 categories, 12 degrees of freedom; 0.999 quantile = 32.909.
    CHECK(chi2 < 32.909);
}

TEST_CASE("transition operator matches simulation frequencies") {
    // Independent cross-check of the forward-equation operator against the
    // thinning simulator, from a fixed initial state.
    const auto hyp = AdmissibleCurve::hyperbola(1.0);
    const double horizon = 0.25;
    const auto mat = transition_matrix_small(hyp, 0.0, horizon, 6);
    const YoungDiagram start({1});
    const int row = mat.index.at(start);
    CHECK(mat.defect[static_cast<std::size_t>(row)] < 1e-5);
    const int n_traj = 30000;
    std::unordered_map<YoungDiagram, long long> counts;
    for (int i = 0; i < n_traj; ++i) {
        SplitRng rng(919, static_cast<std::uint64_t>(i));
        const auto traj = simulate(hyp, 0.0, horizon, start, rng);
        ++counts[traj.state_at(horizon)];
    }
    int checked = 0;
    for (std::size_t j = 0; j < mat.states.size(); ++j) {
        const double p = mat.entry(row, static_cast<int>(j));
        if (p < 5e-4) continue;
        const double freq = static_cast<double>(counts[mat.states[j]]) / n_traj;
        CHECK(std::abs(freq - p) < 4.0 * std::sqrt(p * (1.0 - p) / n_traj) + 1e-5);
        ++checked;
    }
    CHECK(checked >= 6);
}

TEST_CASE("stationary marginal matches the poissonized measure") {
    const double theta = 1.0;
    const auto hyp = AdmissibleCurve::hyperbola(theta);
    SplitRng rng(23, 0);
    const int n = 30000;
    std::map<YoungDiagram, long long> counts;
    for (int i = 0; i < n; ++i) {
        const auto traj = simulate(hyp, 0.0, 0.8, std::nullopt, rng);
        ++counts[traj.state_at(0.8)];
    }
    for (const auto& lambda :
         {yd({}), yd({1}), yd({2}), yd({1, 1}), yd({2, 1}), yd({3}), yd({2, 2})}) {
        const double p = poissonized_weight(theta, lambda);
        const double freq = static_cast<double>(counts[lambda]) / n;
        CHECK(std::abs(freq - p) < 4.0 * std::sqrt(p * (1 - p) / n));
    }
}

TEST_CASE("marginal law along the diagonal line is Poisson(theta(t))") {
    const auto line = AdmissibleCurve::diagonal_line(2.0);
    const int n = 20000;
    for (double t : {-0.5, 0.0, 0.6}) {
        std::map<std::int64_t, long long> sizes;
        SplitRng local(29, static_cast<std::uint64_t>(600 + 100 * t));
        for (int i = 0; i < n; ++i) {
            const auto traj = simulate(line, -1.2, 0.7, std::nullopt, local);
            ++sizes[traj.state_at(t).size()];
        }
        const double th = line.theta_at(t);
        for (int k = 0; k <= 3; ++k) {
            const double pk = std::exp(-th) * std::pow(th, k) / std::tgamma(k + 1.0);
            const double freq = static_cast<double>(sizes[k]) / n;
            CHECK(std::abs(freq - pk) < 4.5 * std::sqrt(pk * (1 - pk) / n));
        }
    }
}

TEST_CASE("reversibility of the stationary process") {
    // Joint frequencies of (state(0), state(tau)) are exchange-symmetric.
    const auto hyp = AdmissibleCurve::hyperbola(1.0);
    SplitRng rng(31, 0);
    const int n = 60000;
    std::map<std::pair<YoungDiagram, YoungDiagram>, long long> joint;
    for (int i = 0; i < n; ++i) {
        const auto traj = simulate(hyp, 0.0, 0.5, std::nullopt, rng);
        joint[{traj.state_at(0.0), traj.state_at(0.5)}]++;
    }
    const std::vector<YoungDiagram> small{yd({}), yd({1}), yd({2}), yd({1, 1}), yd({2, 1})};
    for (const auto& a : small) {
        for (const auto& b : small) {
            if (!(a < b)) continue;
            const double pab = static_cast<double>(joint[{a, b}]) / n;
            const double pba = static_cast<double>(joint[{b, a}]) / n;
            const double se = std::sqrt((pab + pba) / n);
            if (se > 0.0) CHECK(std::abs(pab - pba) < 3.5 * se + 1e-9);
        }
    }
}

TEST_CASE("generator consistency at short times") {
    // From a fixed small state, one-step frequencies over [0, h] match h * rate.
    const double theta = 1.0, h = 1e-3;
    const auto hyp = AdmissibleCurve::hyperbola(theta);
    const auto start = yd({2, 1});
    SplitRng rng(37, 0);
    const int n = 400000;
    long long down = 0, up = 0;
    for (int i = 0; i < n; ++i) {
        const auto traj = simulate(hyp, 0.0, h, start, rng);
        if (traj.events.empty()) continue;
        const auto& first = traj.events.front().state;
        (first.size() < start.size() ? down : up) += 1;
    }
    const double p_down_expect = 3.0 * h;  // rate n = 3
    const double p_up_expect = theta * h;
    CHECK(std::abs(down / static_cast<double>(n) - p_down_expect) <
          3.5 * std::sqrt(p_down_expect / n));
    CHECK(std::abs(up / static_cast<double>(n) - p_up_expect) <
          3.5 * std::sqrt(p_up_expect / n));
}

TEST_CASE("truncated transition operator") {
    const auto hyp = AdmissibleCurve::hyperbola(1.0);
    // Short horizon: near identity.
    const auto near_id = transition_matrix_small(hyp, 0.0, 1e-7, 4);
    for (std::size_t i = 0; i < near_id.states.size(); ++i) {
        CHECK(near_id.entry(static_cast<int>(i), static_cast<int>(i)) ==
              doctest::Approx(1.0).epsilon(1e-5));
    }
    // Rows sum to one (with the absorbed mass).
    const auto mat = transition_matrix_small(hyp, 0.0, 0.3, 6);
    for (std::size_t i = 0; i < mat.states.size(); ++i) {
        double row = mat.defect[i];
        for (std::size_t j = 0; j < mat.states.size(); ++j)
            row += mat.entry(static_cast<int>(i), static_cast<int>(j));
        CHECK(row == doctest::Approx(1.0).epsilon(1e-9));
    }
    // The truncated poissonized measure is an approximate fixed vector.
    const auto states = truncated_state_space(12);
    std::vector<double> dist;
    dist.reserve(states.size());
    for (const auto& s : states) dist.push_back(poissonized_weight(1.0, s));
    double defect = 0.0;
    const auto evolved = evolve_distribution(hyp, 0.0, 0.5, dist, 12, &defect);
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
        worst = std::max(worst, std::abs(evolved[i] - dist[i]));
    CHECK(worst < 1e-6);
    CHECK(defect < 1e-6);
    CHECK_THROWS_AS(transition_matrix_small(hyp, 0.0, 0.1, 13), std::invalid_argument);
}

TEST_CASE("simulation across piece boundaries preserves the marginal law") {
    // Death leg down to theta = 1 at the joint, then a birth leg up to 3.
    const auto curve =
        AdmissibleCurve::parse("piecewise:[vline:u=2,v=[2,0.5];hline:v=0.5,u=[2,6]]");
    curve.validate(2000);
    CHECK(curve.theta_at(0.0) == doctest::Approx(4.0));
    const double joint = curve.next_boundary_after(0.0);
    CHECK(curve.theta_at(joint) == doctest::Approx(1.0).epsilon(1e-9));
    const double t1 = curve.t_end();
    CHECK(curve.theta_at(t1) == doctest::Approx(3.0).epsilon(1e-9));
    const int n = 30000;
    std::map<std::int64_t, long long> sizes_joint, sizes_end;
    for (int i = 0; i < n; ++i) {
        SplitRng rng(941, static_cast<std::uint64_t>(i));
        const auto traj = simulate(curve, 0.0, t1, std::nullopt, rng);
        ++sizes_joint[traj.state_at(joint).size()];
        ++sizes_end[traj.state_at(t1).size()];
    }
    auto poisson_check = [n](const std::map<std::int64_t, long long>& sizes, double mean) {
        for (int k = 0; k <= 5; ++k) {
            const double pk = std::exp(-mean) * std::pow(mean, k) / std::tgamma(k + 1.0);
            const auto it = sizes.find(k);
            const double freq = it == sizes.end() ? 0.0 : static_cast<double>(it->second) / n;
            CHECK(std::abs(freq - pk) < 4.5 * std::sqrt(pk * (1 - pk) / n));
        }
    };
    poisson_check(sizes_joint, 1.0);
    poisson_check(sizes_end, 3.0);
}

TEST_CASE("simulation rejects bad windows") {
    const auto vline = AdmissibleCurve::vertical_line(1.0, 2.0, 1.0);
    SplitRng rng(41, 0);
    CHECK_THROWS_AS(simulate(vline, 0.2, 0.1, std::nullopt, rng), std::invalid_argument);
    CHECK_THROWS_AS(simulate(vline, 0.0, 100.0, std::nullopt, rng), std::invalid_argument);
}
