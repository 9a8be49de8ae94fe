#include "maglab/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "maglab/closed_form.hpp"
#include "maglab/connections.hpp"
#include "maglab/model_space.hpp"

namespace maglab {

namespace {

struct Suite {
    std::mt19937_64 rng;
    int trials;
    bool corrupt_phi;
    std::vector<PropertyResult> results;

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    FrameTangent random_tangent(int n) {
        FrameTangent v = FrameTangent::zero(n);
        for (int i = 0; i < n; ++i) {
            v.a[i] = uniform(-2.0, 2.0);
            v.b[i] = uniform(-2.0, 2.0);
        }
        v.c = uniform(-2.0, 2.0);
        return v;
    }

    Point random_point(int n) {
        Point p = Point::origin(n);
        for (int i = 0; i < n; ++i) {
            p.x[i] = uniform(-3.0, 3.0);
            p.y[i] = uniform(-3.0, 3.0);
        }
        p.z = uniform(-3.0, 3.0);
        return p;
    }

    // phi, optionally with the injected sign fault
    FrameTangent apply_phi(const FrameTangent& v) {
        FrameTangent out = phi(v);
        if (corrupt_phi && !out.a.empty()) out.a[0] = -out.a[0];
        return out;
    }

    void property(const std::string& name, double tolerance, const std::function<double()>& worst_err) {
        PropertyResult r;
        r.name = name;
        r.tolerance = tolerance;
        r.max_err = trials > 0 ? worst_err() : 0.0;
        r.pass = r.max_err <= tolerance;
        results.push_back(std::move(r));
    }
};

double frame_max_abs(const FrameTangent& v) {
    double m = std::abs(v.c);
    for (int i = 0; i < v.n(); ++i) {
        m = std::max(m, std::abs(v.a[i]));
        m = std::max(m, std::abs(v.b[i]));
    }
    return m;
}

// eta's coefficient on the coordinate basis field with the given index
// (0..n-1 -> d/dx_i, n..2n-1 -> d/dy_i, 2n -> d/dz), as a function of p.
double eta_coefficient(const Point& p, int idx) {
    const int n = p.n();
    if (idx < n) return -0.5 * p.y[idx];
    if (idx < 2 * n) return 0.0;
    return 0.5;
}

Point shift_point(Point p, int idx, double step) {
    const int n = p.n();
    if (idx < n) {
        p.x[idx] += step;
    } else if (idx < 2 * n) {
        p.y[idx - n] += step;
    } else {
        p.z += step;
    }
    return p;
}

CoordTangent coordinate_basis_field(int n, int idx) {
    CoordTangent v = CoordTangent::zero(n);
    if (idx < n) {
        v.dx[idx] = 1.0;
    } else if (idx < 2 * n) {
        v.dy[idx - n] = 1.0;
    } else {
        v.dz = 1.0;
    }
    return v;
}

// smooth low-frequency test field on a trajectory grid
FieldAlongCurve smooth_test_field(Suite& s, const Trajectory& traj) {
    const int n = traj.n();
    struct Wave {
        double amp, freq, phase;
    };
    std::vector<std::vector<Wave>> waves(2 * n + 1);
    for (auto& per_comp : waves) {
        per_comp.resize(2);
        for (auto& w : per_comp) {
            w = Wave{s.uniform(-1.0, 1.0), s.uniform(0.2, 2.0), s.uniform(0.0, 6.28)};
        }
    }
    FieldAlongCurve f;
    f.samples.reserve(traj.size());
    for (double t : traj.t) {
        FrameTangent v = FrameTangent::zero(n);
        auto eval = [&](int comp) {
            double acc = 0.0;
            for (const auto& w : waves[comp]) acc += w.amp * std::sin(w.freq * t + w.phase);
            return acc;
        };
        for (int i = 0; i < n; ++i) {
            v.a[i] = eval(i);
            v.b[i] = eval(n + i);
        }
        v.c = eval(2 * n);
        f.samples.push_back(std::move(v));
    }
    return f;
}

Trajectory random_closed_form_trajectory(Suite& s) {
    const int n = s.uniform_int(1, 2);
    double q = s.uniform(0.5, 3.0) * (s.uniform_int(0, 1) ? 1.0 : -1.0);
    const double theta = s.uniform(0.3, std::numbers::pi - 0.3);
    if (std::abs(q - 2.0 * std::cos(theta)) < 1e-3) q += 0.5;
    return sample(CurveSpec::even_split(n, q, theta), 2.0, 1e-3);
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& p : properties) {
        if (!p.pass) return false;
    }
    return true;
}

VerifyReport run_verify_suite(const VerifyOptions& opts) {
    Suite s{std::mt19937_64(opts.seed), opts.trials, opts.corrupt_phi, {}};

    s.property("phi_squared_identity", 1e-12, [&] {
        // phi^2 V = -V + eta(V) xi
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const FrameTangent v = s.random_tangent(n);
            FrameTangent lhs = s.apply_phi(s.apply_phi(v));
            FrameTangent rhs = scale(-1.0, v);
            axpy(rhs, eta(v), FrameTangent::xi(n));
            worst = std::max(worst, frame_max_abs(sub(lhs, rhs)));
        }
        return worst;
    });

    s.property("eta_phi_vanishes", 1e-12, [&] {
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            worst = std::max(worst, std::abs(eta(s.apply_phi(s.random_tangent(s.uniform_int(1, 3))))));
        }
        return worst;
    });

    s.property("eta_xi_is_one", 1e-12, [&] {
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            worst = std::max(worst, std::abs(eta(FrameTangent::xi(s.uniform_int(1, 3))) - 1.0));
        }
        return worst;
    });

    s.property("metric_phi_compatibility", 1e-12, [&] {
        // g(V, W) = g(phi V, phi W) + eta(V) eta(W)
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const FrameTangent v = s.random_tangent(n);
            const FrameTangent w = s.random_tangent(n);
            const double lhs = metric(v, w);
            const double rhs = metric(s.apply_phi(v), s.apply_phi(w)) + eta(v) * eta(w);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        return worst;
    });

    s.property("frame_coord_roundtrip", 1e-12, [&] {
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const Point p = s.random_point(n);
            const FrameTangent v = s.random_tangent(n);
            worst = std::max(worst, frame_max_abs(sub(to_frame(p, to_coord(p, v)), v)));
        }
        return worst;
    });

    s.property("contact_form_differential", 1e-6, [&] {
        // d(eta) on constant coordinate fields equals Omega, via central
        // finite differences of eta's coefficient functions
        const double step = 1e-4;
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const Point p = s.random_point(n);
            const int ai = s.uniform_int(0, 2 * n);
            const int bi = s.uniform_int(0, 2 * n);
            const double d_a_etab = (eta_coefficient(shift_point(p, ai, step), bi) -
                                     eta_coefficient(shift_point(p, ai, -step), bi)) /
                                    (2.0 * step);
            const double d_b_etaa = (eta_coefficient(shift_point(p, bi, step), ai) -
                                     eta_coefficient(shift_point(p, bi, -step), ai)) /
                                    (2.0 * step);
            const double d_eta = 0.5 * (d_a_etab - d_b_etaa);
            const FrameTangent ea = to_frame(p, coordinate_basis_field(n, ai));
            const FrameTangent eb = to_frame(p, coordinate_basis_field(n, bi));
            worst = std::max(worst, std::abs(d_eta - metric(ea, s.apply_phi(eb))));
        }
        return worst;
    });

    s.property("two_form_antisymmetry", 1e-12, [&] {
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const FrameTangent v = s.random_tangent(n);
            const FrameTangent w = s.random_tangent(n);
            worst = std::max(worst, std::abs(metric(v, s.apply_phi(w)) + metric(w, s.apply_phi(v))));
        }
        return worst;
    });

    s.property("torsion_antisymmetry", 1e-12, [&] {
        double worst = 0.0;
        for (int k = 0; k < s.trials; ++k) {
            const int n = s.uniform_int(1, 3);
            const FrameTangent v = s.random_tangent(n);
            const FrameTangent w = s.random_tangent(n);
            worst = std::max(worst, frame_max_abs(add(torsion_tw(v, w), torsion_tw(w, v))));
        }
        return worst;
    });

    // connection checks run on a handful of trajectories, not per trial
    const int traj_rounds = opts.trials > 0 ? 4 : 0;

    s.property("tw_path_agreement", 1e-7, [&] {
        double worst = 0.0;
        for (int r = 0; r < traj_rounds; ++r) {
            const Trajectory traj = random_closed_form_trajectory(s);
            const FieldAlongCurve f = smooth_test_field(s, traj);
            const FieldAlongCurve d1 = covariant_along(traj, f, ConnectionKind::TanakaWebster);
            const FieldAlongCurve d2 = covariant_along_tw_via_lc(traj, f);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                worst = std::max(worst, frame_max_abs(sub(d1.samples[k], d2.samples[k])));
            }
        }
        return worst;
    });

    for (const auto kind : {ConnectionKind::TanakaWebster, ConnectionKind::LeviCivita}) {
        const char* name = kind == ConnectionKind::TanakaWebster ? "tw_metricity" : "lc_metricity";
        s.property(name, 1e-6, [&, kind] {
            // d/dt g(V, W) = g(DV, W) + g(V, DW)
            double worst = 0.0;
            for (int r = 0; r < traj_rounds; ++r) {
                const Trajectory traj = random_closed_form_trajectory(s);
                const FieldAlongCurve v = smooth_test_field(s, traj);
                const FieldAlongCurve w = smooth_test_field(s, traj);
                std::vector<double> products(traj.size());
                for (std::size_t k = 0; k < traj.size(); ++k) {
                    products[k] = metric(v.samples[k], w.samples[k]);
                }
                const std::vector<double> rate = differentiate_samples(products, traj.dt);
                const FieldAlongCurve dv = covariant_along(traj, v, kind);
                const FieldAlongCurve dw = covariant_along(traj, w, kind);
                for (std::size_t k = 0; k < traj.size(); ++k) {
                    const double rhs =
                        metric(dv.samples[k], w.samples[k]) + metric(v.samples[k], dw.samples[k]);
                    worst = std::max(worst, std::abs(rate[k] - rhs));
                }
            }
            return worst;
        });
    }

    s.property("tw_phi_parallel", 1e-6, [&] {
        // D(phi V) = phi(D V)
        double worst = 0.0;
        for (int r = 0; r < traj_rounds; ++r) {
            const Trajectory traj = random_closed_form_trajectory(s);
            const FieldAlongCurve v = smooth_test_field(s, traj);
            FieldAlongCurve phi_v;
            phi_v.samples.reserve(traj.size());
            for (const auto& sample_v : v.samples) phi_v.samples.push_back(phi(sample_v));
            const FieldAlongCurve lhs = covariant_along(traj, phi_v, ConnectionKind::TanakaWebster);
            const FieldAlongCurve dv = covariant_along(traj, v, ConnectionKind::TanakaWebster);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                worst = std::max(worst, frame_max_abs(sub(lhs.samples[k], phi(dv.samples[k]))));
            }
        }
        return worst;
    });

    s.property("tw_xi_parallel", 1e-12, [&] {
        // D xi = 0, exactly in the frame path
        double worst = 0.0;
        for (int r = 0; r < traj_rounds; ++r) {
            const Trajectory traj = random_closed_form_trajectory(s);
            FieldAlongCurve xi_field;
            xi_field.samples.assign(traj.size(), FrameTangent::xi(traj.n()));
            const FieldAlongCurve d = covariant_along(traj, xi_field, ConnectionKind::TanakaWebster);
            for (const auto& sample_d : d.samples) {
                worst = std::max(worst, frame_max_abs(sample_d));
            }
        }
        return worst;
    });

    return VerifyReport{std::move(s.results)};
}

}  // namespace maglab
