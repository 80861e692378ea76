#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plancherel/airy.hpp"

#include <optional>
#include <sstream>

#include "plancherel/asymptotics.hpp"
#include "plancherel/bessel.hpp"
#include "plancherel/correlations.hpp"
#include "plancherel/curves.hpp"
#include "plancherel/dynamics.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/poisson_rsk.hpp"
#include "plancherel/serialize.hpp"
#include "plancherel/verify.hpp"
#include "plancherel/version.hpp"

namespace py = pybind11;
using namespace plancherel;

namespace {

std::vector<std::int64_t> diagram_rows(const YoungDiagram& d) {
    return {d.rows().begin(), d.rows().end()};
}

YoungDiagram diagram_from_rows(const std::vector<std::int64_t>& rows) {
    return YoungDiagram(rows);
}

HalfInt half_from_float(double value) {
    const double twice = 2.0 * value;
    const auto rounded = static_cast<std::int64_t>(std::llround(twice));
    if (std::abs(twice - static_cast<double>(rounded)) > 1e-9 || rounded % 2 == 0)
        throw std::invalid_argument("lattice positions must be half-integers like 0.5, -1.5");
    return HalfInt::from_twice(rounded);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Markov dynamics of the poissonized Plancherel measure";
    m.attr("__version__") = kVersion;

    // -------------------------------------------------------------- diagrams
    m.def("dim", [](const std::vector<std::int64_t>& rows) {
        const auto d = dim(diagram_from_rows(rows));
        return py::make_tuple(d.log_value, d.exact ? py::cast(d.exact->to_string()) : py::none());
    },
          "log dimension and (for small diagrams) the exact value as a string");
    m.def("p_down", [](const std::vector<std::int64_t>& lam, const std::vector<std::int64_t>& mu) {
        return p_down(diagram_from_rows(lam), diagram_from_rows(mu));
    });
    m.def("p_up", [](const std::vector<std::int64_t>& lam, const std::vector<std::int64_t>& nu) {
        return p_up(diagram_from_rows(lam), diagram_from_rows(nu));
    });
    m.def("plancherel_weight", [](std::int64_t n, const std::vector<std::int64_t>& rows) {
        return plancherel_weight(n, diagram_from_rows(rows));
    });
    m.def("poissonized_weight", [](double theta, const std::vector<std::int64_t>& rows) {
        return poissonized_weight(theta, diagram_from_rows(rows));
    });
    m.def("enumerate_diagrams", [](int n, int cap) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& d : enumerate_diagrams(n, cap)) out.push_back(diagram_rows(d));
        return out;
    }, py::arg("n"), py::arg("cap") = 30);
    m.def("point_config", [](const std::vector<std::int64_t>& rows) {
        const auto config = point_config(diagram_from_rows(rows));
        std::vector<std::string> particles, holes;
        for (auto p : config.particles) particles.push_back(p.str());
        for (auto h : config.holes) holes.push_back(h.str());
        return py::make_tuple(particles, holes);
    });
    m.def("diagram_of", [](const std::vector<std::string>& particles,
                           const std::vector<std::string>& holes) {
        PointConfiguration config;
        for (const auto& p : particles) config.particles.push_back(HalfInt::parse(p));
        for (const auto& h : holes) config.holes.push_back(HalfInt::parse(h));
        return diagram_rows(diagram_of(config));
    });
    m.def("contains_point", [](const std::vector<std::int64_t>& rows, double x) {
        return contains_point(diagram_from_rows(rows), half_from_float(x));
    });

    // -------------------------------------------------------------- sampling
    m.def("sample_m_theta", [](double theta, std::uint64_t seed, std::uint64_t stream) {
        SplitRng rng(seed, stream);
        return diagram_rows(sample_M_theta(theta, rng));
    }, py::arg("theta"), py::arg("seed"), py::arg("stream") = 0);
    m.def("rs_shape", [](const std::vector<int>& word) {
        return diagram_rows(rs_shape(Permutation{word}));
    });
    m.def("lis_length", [](const std::vector<int>& word) {
        return lis_length(std::span<const int>(word.data(), word.size()));
    });
    m.def("lambda_at", [](const std::vector<std::pair<double, double>>& pts, double u, double v) {
        std::vector<PlanarPoint> planar;
        planar.reserve(pts.size());
        for (auto [pu, pv] : pts) planar.push_back({pu, pv});
        return diagram_rows(lambda_at(PlanarConfiguration(std::move(planar)), u, v));
    });

    // ------------------------------------------------------------ simulation
    m.def("simulate",
          [](const std::string& curve, double t0, double t1, std::uint64_t seed,
             std::uint64_t stream, std::optional<std::vector<std::int64_t>> initial) {
              SplitRng rng(seed, stream);
              const auto c = AdmissibleCurve::parse(curve);
              std::optional<YoungDiagram> init;
              if (initial) init = diagram_from_rows(*initial);
              const auto traj = simulate(c, t0, t1, init, rng);
              std::vector<std::pair<double, std::vector<std::int64_t>>> events;
              for (const auto& e : traj.events) events.emplace_back(e.time, diagram_rows(e.state));
              return py::make_tuple(diagram_rows(traj.initial_state), events);
          },
          py::arg("curve"), py::arg("t0"), py::arg("t1"), py::arg("seed"), py::arg("stream") = 0,
          py::arg("initial") = py::none());
    m.def("shape_process",
          [](const std::string& curve, double t0, double t1, std::uint64_t seed,
             std::uint64_t stream) {
              const auto c = AdmissibleCurve::parse(curve);
              PoissonRealization realization(seed, stream);
              realization.ensure_box(c.at(t1).u * 1.0000001, c.at(t0).v * 1.0000001);
              const auto traj = shape_process_along(realization.config(), c, t0, t1);
              std::vector<std::pair<double, std::vector<std::int64_t>>> events;
              for (const auto& e : traj.events) events.emplace_back(e.time, diagram_rows(e.state));
              return py::make_tuple(diagram_rows(traj.initial_state), events);
          },
          py::arg("curve"), py::arg("t0"), py::arg("t1"), py::arg("seed"), py::arg("stream") = 0);
    m.def("theta_at", [](const std::string& curve, double t) {
        return AdmissibleCurve::parse(curve).theta_at(t);
    });

    // --------------------------------------------------------------- kernels
    m.def("bessel_j", &bessel_j, py::arg("m"), py::arg("z"));
    m.def("discrete_bessel", [](double theta, double x, double y, const std::string& method) {
        const DiscreteBesselKernel kernel(theta);
        const auto v = method == "ratio" ? kernel.ratio(half_from_float(x), half_from_float(y))
                                         : kernel.series(half_from_float(x), half_from_float(y));
        return v.value;
    }, py::arg("theta"), py::arg("x"), py::arg("y"), py::arg("method") = "series");
    m.def("extended_kernel",
          [](double theta_s, double theta_t, double s, double t, double x, double y,
             const std::string& method) {
              return method == "contour"
                         ? extended_kernel_contour(theta_s, theta_t, s, t, half_from_float(x),
                                                   half_from_float(y))
                               .value
                         : extended_kernel_series(theta_s, theta_t, s, t, half_from_float(x),
                                                  half_from_float(y))
                               .value;
          },
          py::arg("theta_s"), py::arg("theta_t"), py::arg("s"), py::arg("t"), py::arg("x"),
          py::arg("y"), py::arg("method") = "series");
    m.def("rho_det", [](double theta, const std::vector<std::pair<double, double>>& points) {
        std::vector<SpaceTimePoint> pts;
        for (auto [t, x] : points) pts.push_back({t, half_from_float(x)});
        ExtendedKernelEvaluator eval([theta](double) { return theta; });
        return rho_det(eval, pts);
    });

    // ----------------------------------------------------------- asymptotics
    m.def("sine_kernel", &sine_kernel);
    m.def("extended_sine_kernel",
          static_cast<double (*)(double, double, long long)>(&extended_sine_kernel));
    m.def("airy_ai", &airy_ai);
    m.def("airy_ai_prime", &airy_ai_prime);
    m.def("airy_kernel", &airy_kernel);
    m.def("extended_airy_kernel", &extended_airy_kernel);
    m.def("bulk_check", [](double theta, double c) {
        BulkScalingSpec spec;
        spec.theta = theta;
        spec.c = c;
        spec.offsets = {-3, -2, -1, 0, 1, 2, 3};
        spec.taus = {0.0};
        return bulk_convergence_check(spec).max_abs_error;
    });
    m.def("edge_check", [](double theta) {
        EdgeScalingSpec spec;
        spec.theta = theta;
        spec.xs = {-2.0, -1.0, 0.0, 1.0};
        spec.taus = {0.0};
        return edge_convergence_check(spec).max_abs_error;
    });

    // ---------------------------------------------------------- verification
    m.def("verify", [](const std::string& suite, std::uint64_t seed, bool quick) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.quick = quick;
        const auto results = run_criteria(criteria_for_suite(suite), opts);
        py::list out;
        for (const auto& r : results) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["worst"] = r.worst;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("suite"), py::arg("seed") = 0x5eed0001u, py::arg("quick") = true);
}
