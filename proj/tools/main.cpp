// Command-line front end: sampling, simulation, kernel tables, scaling-limit
// checks, and the verification suites. All outputs are deterministic for a
// fixed seed and configuration; wall-clock timing goes to stderr only so
// reruns stay byte-identical.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plancherel/asymptotics.hpp"
#include "plancherel/correlations.hpp"
#include "plancherel/curves.hpp"
#include "plancherel/dynamics.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/poisson_rsk.hpp"
#include "plancherel/serialize.hpp"
#include "plancherel/verify.hpp"
#include "plancherel/version.hpp"

namespace {

using namespace plancherel;

constexpr int kExitUsage = 2;
constexpr int kExitSuiteFailure = 3;

std::string default_out_dir() {
    const char* env = std::getenv("PLANCHEREL_OUT_DIR");
    return env ? env : ".";
}

std::ofstream open_output(const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / name);
    if (!out) throw std::runtime_error("cannot open output file " + name);
    return out;
}

void write_header(std::ostream& out, const std::string& command, const std::string& config,
                  std::uint64_t seed) {
    out << "# tool=plancherel version=" << kVersion << '\n';
    out << "# command=" << command << '\n';
    out << "# config=" << config << '\n';
    out << "# seed=" << seed << '\n';
}

// Grid syntax "-7/2..7/2" (inclusive, unit steps on Z').
std::vector<HalfInt> parse_grid(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("grid must look like '-7/2..7/2'");
    const HalfInt lo = HalfInt::parse(text.substr(0, dots));
    const HalfInt hi = HalfInt::parse(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("grid bounds out of order");
    std::vector<HalfInt> out;
    for (HalfInt x = lo; x <= hi; x = x + 1) out.push_back(x);
    return out;
}

int run_sample(double theta, long long n_samples, std::uint64_t seed, const std::string& out_dir,
               const std::string& out_name) {
    auto out = open_output(out_dir, out_name);
    std::ostringstream config;
    config << "theta=" << theta << " n=" << n_samples;
    write_header(out, "sample", config.str(), seed);
    std::map<YoungDiagram, long long> counts;
    for (long long i = 0; i < n_samples; ++i) {
        SplitRng rng(seed, static_cast<std::uint64_t>(i));
        ++counts[sample_M_theta(theta, rng)];
    }
    out << "shape,count,frequency\n";
    char buf[64];
    for (const auto& [shape, count] : counts) {
        std::snprintf(buf, sizeof(buf), "%.17g",
                      static_cast<double>(count) / static_cast<double>(n_samples));
        out << '"' << to_json(shape).dump() << "\"," << count << ',' << buf << '\n';
    }
    return 0;
}

int run_simulate(const std::string& curve_desc, double t0, double t1, long long n_traj,
                 std::uint64_t seed, const std::string& out_dir, const std::string& out_name,
                 bool use_rsk, const std::string& points_file) {
    const auto curve = AdmissibleCurve::parse(curve_desc);
    curve.validate(2000);
    auto out = open_output(out_dir, out_name);
    if (!points_file.empty()) {
        // Sweep one ingested point set instead of sampling realizations.
        std::ifstream in(points_file);
        if (!in) throw std::invalid_argument("cannot open point file " + points_file);
        const auto config = PlanarConfiguration::from_csv(in);
        Trajectory traj = shape_process_along(config, curve, t0, t1);
        traj.seed = seed;
        write_trajectory_jsonl(out, traj, curve_desc);
        return 0;
    }
    for (long long i = 0; i < n_traj; ++i) {
        if (use_rsk) {
            PoissonRealization realization(seed, static_cast<std::uint64_t>(i));
            const double u_hi = curve.at(t1).u;
            const double v_hi = curve.at(t0).v;
            realization.ensure_box(u_hi * 1.0000001, v_hi * 1.0000001);
            Trajectory traj = shape_process_along(realization.config(), curve, t0, t1);
            traj.seed = seed;
            traj.stream = static_cast<std::uint64_t>(i);
            write_trajectory_jsonl(out, traj, curve_desc);
        } else {
            SplitRng rng(seed, static_cast<std::uint64_t>(i));
            const Trajectory traj = simulate(curve, t0, t1, std::nullopt, rng);
            write_trajectory_jsonl(out, traj, curve_desc);
        }
    }
    return 0;
}

int run_kernel_table(double theta, const std::string& grid, std::optional<double> s,
                     std::optional<double> t, const std::string& method, std::uint64_t seed,
                     const std::string& out_dir, const std::string& out_name) {
    const auto xs = parse_grid(grid);
    auto out = open_output(out_dir, out_name);
    std::ostringstream config;
    config << "theta=" << theta << " grid=" << grid << " method=" << method;
    write_header(out, "kernel", config.str(), seed);
    out << "s,x,t,y,value,method,error_estimate\n";
    char buf[64];
    const double ss = s.value_or(0.0);
    const double tt = t.value_or(0.0);
    nlohmann::json diagnostics = nlohmann::json::array();
    const DiscreteBesselKernel static_kernel(theta);
    for (const auto& x : xs) {
        for (const auto& y : xs) {
            KernelValue v;
            if (method == "contour") {
                const auto spec = ContourSpec::preferred(ss - tt);
                v = extended_kernel_contour(theta, theta, ss, tt, x, y, spec);
                diagnostics.push_back({{"x", x.str()},
                                       {"y", y.str()},
                                       {"radius1", spec.radius1},
                                       {"radius2", spec.radius2},
                                       {"nodes", v.nodes_used},
                                       {"imag_residue", v.imag_residue}});
            } else if (method == "ratio" && ss == tt) {
                v = static_kernel.ratio(x, y);
            } else if (ss == tt) {
                v = static_kernel.series(x, y);
            } else {
                v = extended_kernel_series(theta, theta, ss, tt, x, y);
            }
            std::snprintf(buf, sizeof(buf), "%.17g", v.value);
            const char* tag = v.method == KernelMethod::series ? "series"
                              : v.method == KernelMethod::ratio ? "ratio"
                                                                : "contour";
            out << ss << ',' << x.str() << ',' << tt << ',' << y.str() << ',' << buf << ',' << tag
                << ',' << v.error_estimate << '\n';
        }
    }
    if (method == "contour") {
        auto diag_out = open_output(out_dir, out_name + ".contour.json");
        diag_out << diagnostics.dump(2) << '\n';
    }
    return 0;
}

int run_limits(const std::string& kind, const std::string& ladder_text, double c,
               const std::string& out_dir, const std::string& out_name) {
    std::vector<double> ladder;
    std::stringstream ss(ladder_text);
    std::string item;
    while (std::getline(ss, item, ',')) ladder.push_back(std::stod(item));
    if (ladder.empty()) throw std::invalid_argument("empty theta ladder");
    auto out = open_output(out_dir, out_name);
    write_header(out, "limits", "kind=" + kind + " ladder=" + ladder_text, 0);
    out << "theta,i,j,finite,limit,abs_error\n";
    char buf[96];
    for (double theta : ladder) {
        ConvergenceReport report;
        if (kind == "bulk") {
            BulkScalingSpec spec;
            spec.c = c;
            spec.theta = theta;
            spec.offsets = {-3, -2, -1, 0, 1, 2, 3};
            spec.taus = {-0.5, 0.0, 0.5};
            report = bulk_convergence_check(spec);
        } else if (kind == "edge") {
            EdgeScalingSpec spec;
            spec.theta = theta;
            spec.xs = {-2.0, -1.0, 0.0, 1.0};
            spec.taus = {-0.5, 0.0, 0.5};
            report = edge_convergence_check(spec);
        } else {
            throw std::invalid_argument("limits kind must be bulk or edge");
        }
        for (const auto& e : report.entries) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", e.finite_value, e.limit_value,
                          e.abs_error);
            out << theta << ',' << e.i << ',' << e.j << ',' << buf << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opts, const std::string& out_dir) {
    const auto ids = criteria_for_suite(suite);
    const auto results = run_criteria(ids, opts);
    bool pass = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d %-22s worst=%-12g %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.worst, r.detail.c_str());
        std::fprintf(stderr, "# criterion %d took %.2fs\n", r.id, r.seconds);
        pass = pass && r.pass;
    }
    auto out = open_output(out_dir, "verdict_" + suite + ".json");
    out << verdict_json(suite, results).dump(2) << '\n';
    return pass ? 0 : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov dynamics of the poissonized Plancherel measure"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config");
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string out_dir = default_out_dir();
    int threads = 0;
    app.add_option("--seed", seed, "64-bit seed recorded in every output");
    app.add_option("--out-dir", out_dir, "output directory (default $PLANCHEREL_OUT_DIR or .)");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* sample = app.add_subcommand("sample", "draw poissonized Plancherel samples");
    double sample_theta = 1.0;
    long long sample_n = 10000;
    std::string sample_out = "samples.csv";
    sample->add_option("--theta", sample_theta, "poissonization parameter")->required();
    sample->add_option("--n", sample_n, "number of samples");
    sample->add_option("--out", sample_out, "output CSV file name");

    auto* simulate_cmd = app.add_subcommand("simulate", "simulate the jump-chain process");
    auto* rsk_cmd = app.add_subcommand("rsk", "sweep an RS shape process over a Poisson field");
    std::string curve_desc = "hyperbola:theta=1";
    double t0 = 0.0, t1 = 1.0;
    long long n_traj = 1;
    std::string traj_out = "trajectories.jsonl";
    std::string rsk_points;
    for (auto* cmd : {simulate_cmd, rsk_cmd}) {
        cmd->add_option("--curve", curve_desc, "curve descriptor");
        cmd->add_option("--t0", t0, "window start");
        cmd->add_option("--t1", t1, "window end");
        cmd->add_option("--n-traj", n_traj, "number of trajectories");
        cmd->add_option("--out", traj_out, "output JSONL file name");
    }
    rsk_cmd->add_option("--points", rsk_points, "sweep an ingested u,v CSV instead of sampling");

    auto* kernel_cmd = app.add_subcommand("kernel", "tabulate correlation kernels");
    double kernel_theta = 1.0;
    std::string kernel_grid = "-7/2..7/2";
    std::string kernel_out = "kernel.csv";
    std::string kernel_method = "series";
    double kernel_s = 0.0, kernel_t = 0.0;
    kernel_cmd->add_option("--theta", kernel_theta, "poissonization parameter")->required();
    kernel_cmd->add_option("--grid", kernel_grid, "half-integer grid, e.g. -7/2..7/2");
    kernel_cmd->add_option("--s", kernel_s, "first interior time");
    kernel_cmd->add_option("--t", kernel_t, "second interior time");
    kernel_cmd->add_option("--method", kernel_method, "series, ratio, or contour");
    kernel_cmd->add_option("--out", kernel_out, "output CSV file name");

    auto* limits_cmd = app.add_subcommand("limits", "bulk/edge scaling-limit error tables");
    std::string limits_kind = "bulk";
    std::string limits_ladder = "25,100,400";
    double limits_c = 0.0;
    std::string limits_out = "limits.csv";
    limits_cmd->add_option("--kind", limits_kind, "bulk or edge");
    limits_cmd->add_option("--theta-ladder", limits_ladder, "comma-separated theta values");
    limits_cmd->add_option("--c", limits_c, "bulk location parameter in (-2,2)");
    limits_cmd->add_option("--out", limits_out, "output CSV file name");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    bool quick = false;
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_flag("--quick", quick, "reduced sample counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        nlohmann::json diag{{"error", "usage"}, {"message", e.what()}};
        std::cerr << diag.dump() << '\n';
        return kExitUsage;
    }

    try {
        const auto started = std::chrono::steady_clock::now();
        int code = 0;
        if (*sample) {
            code = run_sample(sample_theta, sample_n, seed, out_dir, sample_out);
        } else if (*simulate_cmd) {
            code = run_simulate(curve_desc, t0, t1, n_traj, seed, out_dir, traj_out, false, "");
        } else if (*rsk_cmd) {
            code = run_simulate(curve_desc, t0, t1, n_traj, seed, out_dir, traj_out, true,
                                rsk_points);
        } else if (*kernel_cmd) {
            code = run_kernel_table(kernel_theta, kernel_grid, kernel_s, kernel_t, kernel_method,
                                    seed, out_dir, kernel_out);
        } else if (*limits_cmd) {
            code = run_limits(limits_kind, limits_ladder, limits_c, out_dir, limits_out);
        } else if (*verify_cmd) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.threads = threads;
            opts.quick = quick;
            opts.out_dir = out_dir;
            code = run_verify(suite, opts, out_dir);
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::fprintf(stderr, "# wall-clock %.3fs\n", elapsed);
        return code;
    } catch (const std::invalid_argument& e) {
        nlohmann::json diag{{"error", "usage"}, {"message", e.what()}};
        std::cerr << diag.dump() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        nlohmann::json diag{{"error", "runtime"}, {"message", e.what()}};
        std::cerr << diag.dump() << '\n';
        return 1;
    }
}
