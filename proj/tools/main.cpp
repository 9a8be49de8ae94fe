// maglab: generate, integrate, analyze, classify, and sweep magnetic
// curves of the Sasakian model space R^{2n+1}(-3), plus a randomized
// structure audit. Exit codes: 0 ok, 2 invalid input, 3 conservation
// abort during integration.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "maglab/classifier.hpp"
#include "maglab/closed_form.hpp"
#include "maglab/csv_io.hpp"
#include "maglab/frenet.hpp"
#include "maglab/integrator.hpp"
#include "maglab/json_io.hpp"
#include "maglab/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitAbort = 3;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

void emit_json(const json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

maglab::Thresholds profile_thresholds(const std::string& name) {
    if (name == "strict") return maglab::Thresholds::strict();
    if (name == "ode") return maglab::Thresholds::ode();
    throw std::invalid_argument("tolerance profile must be 'strict' or 'ode', got '" + name + "'");
}

// flag > environment > default
std::string resolve_profile(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MAGLAB_TOL_PROFILE")) return env;
    return "strict";
}

struct GenerateArgs {
    std::string config_path;
    int n = 1;
    double strength = 0.0;
    double theta = -1.0;
    std::vector<double> c, d, h;
    bool lambda_zero = false;
    double t_max = 10.0;
    double dt = 1e-3;
    std::string out = "curve.csv";
};

maglab::CurveSpec build_spec(GenerateArgs args) {
    if (!args.config_path.empty()) {
        const json j = load_json_file(args.config_path);
        if (args.n == 1 && j.contains("n")) args.n = j["n"].get<int>();
        if (args.strength == 0.0 && j.contains("q")) args.strength = j["q"].get<double>();
        if (args.theta < 0.0 && j.contains("theta")) args.theta = j["theta"].get<double>();
        if (args.c.empty() && j.contains("c")) args.c = j["c"].get<std::vector<double>>();
        if (args.d.empty() && j.contains("d")) args.d = j["d"].get<std::vector<double>>();
        if (args.h.empty() && j.contains("h")) args.h = j["h"].get<std::vector<double>>();
        if (j.contains("branch")) args.lambda_zero = args.lambda_zero || j["branch"] == "linear";
        if (j.contains("t_max")) args.t_max = j["t_max"].get<double>();
        if (j.contains("dt")) args.dt = j["dt"].get<double>();
        if (j.contains("out")) args.out = j["out"].get<std::string>();
    }
    if (args.theta < 0.0) throw std::invalid_argument("generate: --theta is required (radians)");

    if (args.lambda_zero) {
        if (args.c.empty() && args.d.empty()) {
            maglab::CurveSpec even = maglab::CurveSpec::even_split(args.n, args.strength, args.theta);
            if (even.branch != maglab::CurveBranch::Linear) {
                throw std::invalid_argument("CurveSpec: linear branch requires q = 2 cos(theta)");
            }
            return even;
        }
        if (args.c.empty()) throw std::invalid_argument("generate: linear branch needs --c (2n+1 slopes)");
        if (args.d.empty()) args.d.assign(2 * args.n, 0.0);
        return maglab::CurveSpec::linear(args.n, args.strength, args.theta, args.c, args.d);
    }
    if (args.c.empty() && args.d.empty() && args.h.empty()) {
        return maglab::CurveSpec::even_split(args.n, args.strength, args.theta);
    }
    if (args.c.empty()) throw std::invalid_argument("generate: rotating branch needs --c (n amplitudes)");
    if (args.d.empty()) args.d.assign(args.n, 0.0);
    if (args.h.empty()) args.h.assign(2 * args.n + 1, 0.0);
    return maglab::CurveSpec::rotating(args.n, args.strength, args.theta, args.c, args.d, args.h);
}

struct SweepRow {
    double strength = 0.0;
    double theta = 0.0;
    double lambda = 0.0;
    std::string branch;
    std::optional<double> k1_pred, k1_est, k2_pred, k2_est, k3_est;
    double residual = 0.0;
};

SweepRow sweep_row(int n, double strength, double theta, double t_max, double dt) {
    SweepRow row;
    row.strength = strength;
    row.theta = theta;
    row.lambda = strength - 2.0 * std::cos(theta);

    const maglab::CurveSpec spec = maglab::CurveSpec::even_split(n, strength, theta);
    const maglab::Trajectory traj = maglab::sample(spec, t_max, dt);
    const maglab::FrenetReport rep = maglab::frenet_apparatus(traj);
    const maglab::Classification cls = maglab::classify(traj, strength);

    row.branch = maglab::branch_name(cls.branch);
    row.residual = cls.evidence.residual;
    if (rep.osc_order >= 2) {
        row.k1_pred = std::abs(row.lambda) * std::sin(theta);
        row.k1_est = rep.k1.mean;
    }
    if (rep.osc_order >= 3) {
        row.k2_pred = std::abs(row.lambda) * std::abs(std::cos(theta));
        row.k2_est = rep.k2.mean;
        row.k3_est = rep.k3.mean;
    }
    return row;
}

std::string optional_cell(const std::optional<double>& v) {
    return v ? maglab::format_double(*v) : std::string();
}

int run_generate(const GenerateArgs& args) {
    const maglab::CurveSpec spec = build_spec(args);
    if (!(args.dt > 0.0) || args.dt > args.t_max) {
        throw std::invalid_argument("generate: need 0 < dt <= t_max");
    }
    maglab::write_trajectory_csv(args.out, maglab::sample(spec, args.t_max, args.dt));
    return 0;
}

struct IntegrateArgs {
    std::string config_path;
    int n = 1;
    double strength = 0.0;
    double theta = -1.0;
    std::vector<double> p0, v0;
    double t_max = 10.0;
    double dt = 1e-3;
    std::string out = "trajectory.csv";
};

int run_integrate(IntegrateArgs args) {
    if (!args.config_path.empty()) {
        const json j = load_json_file(args.config_path);
        if (args.n == 1 && j.contains("n")) args.n = j["n"].get<int>();
        if (args.strength == 0.0 && j.contains("q")) args.strength = j["q"].get<double>();
        if (args.theta < 0.0 && j.contains("theta")) args.theta = j["theta"].get<double>();
        if (args.p0.empty() && j.contains("p0")) args.p0 = j["p0"].get<std::vector<double>>();
        if (args.v0.empty() && j.contains("v0")) args.v0 = j["v0"].get<std::vector<double>>();
        if (j.contains("t_max")) args.t_max = j["t_max"].get<double>();
        if (j.contains("dt")) args.dt = j["dt"].get<double>();
        if (j.contains("out")) args.out = j["out"].get<std::string>();
    }

    maglab::MagneticIVP ivp;
    ivp.n = args.n;
    ivp.strength = args.strength;
    ivp.t_max = args.t_max;
    ivp.dt = args.dt;

    ivp.p0 = maglab::Point::origin(args.n);
    if (!args.p0.empty()) {
        if (args.p0.size() != static_cast<std::size_t>(2 * args.n + 1)) {
            throw std::invalid_argument("integrate: --p0 needs 2n+1 entries (x..., y..., z)");
        }
        for (int i = 0; i < args.n; ++i) {
            ivp.p0.x[i] = args.p0[i];
            ivp.p0.y[i] = args.p0[args.n + i];
        }
        ivp.p0.z = args.p0[2 * args.n];
    }

    if (!args.v0.empty()) {
        if (args.v0.size() != static_cast<std::size_t>(2 * args.n + 1)) {
            throw std::invalid_argument("integrate: --v0 needs 2n+1 entries (a..., b..., c)");
        }
        ivp.v0 = maglab::FrameTangent::zero(args.n);
        for (int i = 0; i < args.n; ++i) {
            ivp.v0.a[i] = args.v0[i];
            ivp.v0.b[i] = args.v0[args.n + i];
        }
        ivp.v0.c = args.v0[2 * args.n];
        if (args.theta >= 0.0 && std::abs(ivp.v0.c - std::cos(args.theta)) > 1e-9) {
            throw std::invalid_argument("integrate: --theta conflicts with eta(v0)");
        }
    } else {
        if (args.theta < 0.0) throw std::invalid_argument("integrate: give --v0 or --theta");
        // canonical start: velocity in the first phi-plane at the contact angle
        ivp.v0 = maglab::FrameTangent::zero(args.n);
        ivp.v0.b[0] = std::sin(args.theta);
        ivp.v0.c = std::cos(args.theta);
    }

    const maglab::Trajectory traj = maglab::integrate(ivp);
    const double drift = std::max(traj.max_speed_defect(), traj.max_slant_defect());
    if (drift > 1e-8) {
        std::cerr << "warning: conservation drift " << drift << " exceeds 1e-8\n";
    }
    maglab::write_trajectory_csv(args.out, traj);
    return 0;
}

int run_analyze(const std::string& in_path, double strength, const std::string& out_path,
                bool per_node) {
    const maglab::Trajectory traj = maglab::read_trajectory_csv(in_path, strength);
    const maglab::FrenetReport rep = maglab::frenet_apparatus(traj);
    const double residual = maglab::lorentz_residual(traj, strength);

    json j = maglab::to_json(rep, residual, per_node);
    j["n"] = traj.n();
    j["nodes"] = traj.size();
    j["dt"] = traj.dt;
    j["branch"] = maglab::branch_name(maglab::classify(traj, strength).branch);
    if (rep.osc_order >= 2) {
        const double st = std::sqrt(std::max(0.0, 1.0 - rep.cos_theta * rep.cos_theta));
        if (st > 1e-6) {
            const maglab::FrameResiduals fr = maglab::frame_formula_residuals(traj, rep);
            json frj = json::object();
            frj["e2"] = fr.r2;
            frj["e3"] = fr.r3 ? json(*fr.r3) : json(nullptr);
            j["frame_residuals"] = frj;
        }
    }
    emit_json(j, out_path);
    return 0;
}

int run_classify(const std::string& in_path, double strength, const std::string& profile,
                 const std::string& out_path) {
    const maglab::Trajectory traj = maglab::read_trajectory_csv(in_path, strength);
    const maglab::Classification cls = maglab::classify(traj, strength, profile_thresholds(profile));
    emit_json(maglab::to_json(cls, profile), out_path);
    return 0;
}

int run_sweep(int n, std::vector<double> strengths, std::vector<double> thetas, double t_max,
              double dt, const std::string& out_prefix, bool parallel) {
    if (strengths.empty() || thetas.empty()) {
        throw std::invalid_argument("sweep: --q-list and --theta-list must be nonempty");
    }
    for (double q : strengths) {
        if (q == 0.0) throw std::invalid_argument("sweep: q must be nonzero");
    }

    std::vector<SweepRow> rows(strengths.size() * thetas.size());
    auto compute = [&](std::size_t idx) {
        const double q = strengths[idx / thetas.size()];
        const double theta = thetas[idx % thetas.size()];
        rows[idx] = sweep_row(n, q, theta, t_max, dt);
    };
    if (parallel) {
        std::vector<std::future<void>> jobs;
        jobs.reserve(rows.size());
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            jobs.push_back(std::async(std::launch::async, compute, idx));
        }
        for (auto& job : jobs) job.get();
    } else {
        for (std::size_t idx = 0; idx < rows.size(); ++idx) compute(idx);
    }

    std::string table = "q,theta,n,lambda,branch,k1_pred,k1_est,k2_pred,k2_est,k3_est,residual\n";
    std::string k1_plot = "# q theta k1_pred k1_est\n";
    std::string k2_plot = "# q theta k2_pred k2_est\n";
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const SweepRow& r = rows[idx];
        table += maglab::format_double(r.strength) + ',' + maglab::format_double(r.theta) + ',' +
                 std::to_string(n) + ',' + maglab::format_double(r.lambda) + ',' + r.branch + ',' +
                 optional_cell(r.k1_pred) + ',' + optional_cell(r.k1_est) + ',' +
                 optional_cell(r.k2_pred) + ',' + optional_cell(r.k2_est) + ',' +
                 optional_cell(r.k3_est) + ',' + maglab::format_double(r.residual) + '\n';
        if (r.k1_pred) {
            k1_plot += maglab::format_double(r.strength) + ' ' + maglab::format_double(r.theta) + ' ' +
                       maglab::format_double(*r.k1_pred) + ' ' + maglab::format_double(*r.k1_est) + '\n';
        }
        if (r.k2_pred) {
            k2_plot += maglab::format_double(r.strength) + ' ' + maglab::format_double(r.theta) + ' ' +
                       maglab::format_double(*r.k2_pred) + ' ' + maglab::format_double(*r.k2_est) + '\n';
        }
        if ((idx + 1) % thetas.size() == 0) {  // gnuplot-style block per strength
            k1_plot += '\n';
            k2_plot += '\n';
        }
    }
    write_text_file(out_prefix + ".csv", table);
    write_text_file(out_prefix + "_k1.dat", k1_plot);
    write_text_file(out_prefix + "_k2.dat", k2_plot);
    return 0;
}

int run_verify(std::uint64_t seed, int trials, bool corrupt_phi, const std::string& out_path) {
    maglab::VerifyOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.corrupt_phi = corrupt_phi;
    const maglab::VerifyReport report = maglab::run_verify_suite(opts);

    json j = json::object();
    j["seed"] = seed;
    j["trials"] = trials;
    j["fault_injected"] = corrupt_phi;
    j["pass"] = report.all_pass();
    json props = json::array();
    for (const auto& p : report.properties) {
        props.push_back(
            {{"name", p.name}, {"pass", p.pass}, {"max_err", p.max_err}, {"tolerance", p.tolerance}});
        std::cerr << (p.pass ? "[pass] " : "[FAIL] ") << p.name << "  max_err=" << p.max_err
                  << "  tol=" << p.tolerance << '\n';
    }
    j["properties"] = props;
    emit_json(j, out_path);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magnetic curve laboratory for the Sasakian model space R^{2n+1}(-3)"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "closed-form magnetic curve -> CSV");
    cmd_gen->add_option("--config", gen.config_path, "JSON config; flags override");
    cmd_gen->add_option("--n", gen.n, "phi-plane count (dimension 2n+1)");
    cmd_gen->add_option("--q", gen.strength, "magnetic strength (nonzero)");
    cmd_gen->add_option("--theta", gen.theta, "contact angle in radians");
    cmd_gen->add_option("--c", gen.c, "amplitudes / slopes")->delimiter(',');
    cmd_gen->add_option("--d", gen.d, "phases / intercepts")->delimiter(',');
    cmd_gen->add_option("--offset", gen.h, "position offsets (rotating branch)")->delimiter(',');
    cmd_gen->add_flag("--lambda-zero", gen.lambda_zero, "use the linear branch (q = 2 cos(theta))");
    cmd_gen->add_option("--tmax", gen.t_max, "arc-length horizon");
    cmd_gen->add_option("--dt", gen.dt, "grid step");
    cmd_gen->add_option("--out", gen.out, "output CSV path");

    IntegrateArgs integ;
    auto* cmd_int = app.add_subcommand("integrate", "RK4 magnetic curve -> CSV");
    cmd_int->add_option("--config", integ.config_path, "JSON config; flags override");
    cmd_int->add_option("--n", integ.n, "phi-plane count");
    cmd_int->add_option("--q", integ.strength, "magnetic strength (nonzero)");
    cmd_int->add_option("--theta", integ.theta, "contact angle; builds the canonical v0");
    cmd_int->add_option("--p0", integ.p0, "start point: x1..xn,y1..yn,z")->delimiter(',');
    cmd_int->add_option("--v0", integ.v0, "start velocity (frame): a1..an,b1..bn,c")->delimiter(',');
    cmd_int->add_option("--tmax", integ.t_max, "arc-length horizon");
    cmd_int->add_option("--dt", integ.dt, "RK4 step");
    cmd_int->add_option("--out", integ.out, "output CSV path");

    std::string analyze_in, analyze_out;
    double analyze_q = 0.0;
    bool analyze_no_per_node = false;
    auto* cmd_ana = app.add_subcommand("analyze", "trajectory CSV -> Frenet report JSON");
    cmd_ana->add_option("--in", analyze_in, "trajectory CSV")->required();
    cmd_ana->add_option("--q", analyze_q, "magnetic strength used for residuals")->required();
    cmd_ana->add_option("--out", analyze_out, "report path (default stdout)");
    cmd_ana->add_flag("--no-per-node", analyze_no_per_node, "omit per-node arrays and frames");

    std::string classify_in, classify_out, profile_flag;
    double classify_q = 0.0;
    auto* cmd_cls = app.add_subcommand("classify", "trajectory CSV -> classification JSON");
    cmd_cls->add_option("--in", classify_in, "trajectory CSV")->required();
    cmd_cls->add_option("--q", classify_q, "candidate magnetic strength")->required();
    cmd_cls->add_option("--out", classify_out, "report path (default stdout)");
    cmd_cls->add_option("--tol-profile", profile_flag,
                        "tolerance profile: strict|ode (or MAGLAB_TOL_PROFILE)");

    int sweep_n = 1;
    std::vector<double> sweep_q, sweep_theta;
    double sweep_tmax = 5.0, sweep_dt = 1e-3;
    std::string sweep_out = "sweep";
    bool sweep_serial = false;
    auto* cmd_swp = app.add_subcommand("sweep", "curvature table over a (q, theta) grid");
    cmd_swp->add_option("--n", sweep_n, "phi-plane count");
    cmd_swp->add_option("--q-list", sweep_q, "strengths")->delimiter(',')->required();
    cmd_swp->add_option("--theta-list", sweep_theta, "contact angles (radians)")
        ->delimiter(',')
        ->required();
    cmd_swp->add_option("--tmax", sweep_tmax, "arc-length horizon per row");
    cmd_swp->add_option("--dt", sweep_dt, "grid step");
    cmd_swp->add_option("--out", sweep_out, "output prefix (.csv, _k1.dat, _k2.dat)");
    cmd_swp->add_flag("--serial", sweep_serial, "disable row parallelism");

    std::uint64_t verify_seed = 42;
    int verify_trials = 1000;
    bool verify_fault = false;
    std::string verify_out;
    auto* cmd_ver = app.add_subcommand("verify", "randomized structure/connection audit");
    cmd_ver->add_option("--seed", verify_seed, "RNG seed");
    cmd_ver->add_option("--trials", verify_trials, "random trials per property");
    cmd_ver->add_flag("--inject-phi-fault", verify_fault, "corrupt phi to prove suite sensitivity");
    cmd_ver->add_option("--out", verify_out, "audit JSON path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) return run_generate(gen);
        if (*cmd_int) return run_integrate(integ);
        if (*cmd_ana) return run_analyze(analyze_in, analyze_q, analyze_out, !analyze_no_per_node);
        if (*cmd_cls) {
            return run_classify(classify_in, classify_q, resolve_profile(profile_flag), classify_out);
        }
        if (*cmd_swp) {
            return run_sweep(sweep_n, sweep_q, sweep_theta, sweep_tmax, sweep_dt, sweep_out,
                             !sweep_serial);
        }
        if (*cmd_ver) return run_verify(verify_seed, verify_trials, verify_fault, verify_out);
    } catch (const maglab::IntegrationFault& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAbort;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
