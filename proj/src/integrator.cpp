#include "maglab/integrator.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "maglab/connections.hpp"

namespace maglab {

namespace {

constexpr double kAbortDefect = 1e-6;

// Flat ODE state: [x_1..x_n, y_1..y_n, z, a_1..a_n, b_1..b_n, c].
struct Layout {
    int n;
    int size() const { return 4 * n + 3; }
    int x(int i) const { return i; }
    int y(int i) const { return n + i; }
    int z() const { return 2 * n; }
    int a(int i) const { return 2 * n + 1 + i; }
    int b(int i) const { return 3 * n + 1 + i; }
    int c() const { return 4 * n + 2; }
};

void pack(const Layout& L, const Point& p, const FrameTangent& v, std::vector<double>& s) {
    for (int i = 0; i < L.n; ++i) {
        s[L.x(i)] = p.x[i];
        s[L.y(i)] = p.y[i];
        s[L.a(i)] = v.a[i];
        s[L.b(i)] = v.b[i];
    }
    s[L.z()] = p.z;
    s[L.c()] = v.c;
}

void unpack(const Layout& L, const std::vector<double>& s, Point& p, FrameTangent& v) {
    for (int i = 0; i < L.n; ++i) {
        p.x[i] = s[L.x(i)];
        p.y[i] = s[L.y(i)];
        v.a[i] = s[L.a(i)];
        v.b[i] = s[L.b(i)];
    }
    p.z = s[L.z()];
    v.c = s[L.c()];
}

// Hand-reduced frame ODE; ds may not alias s.
void reduced_rate(const Layout& L, double q, const std::vector<double>& s, std::vector<double>& ds) {
    const double c = s[L.c()];
    const double rot = q - 2.0 * c;
    double ydx = 0.0;
    for (int i = 0; i < L.n; ++i) {
        ds[L.x(i)] = 2.0 * s[L.b(i)];
        ds[L.y(i)] = 2.0 * s[L.a(i)];
        ds[L.a(i)] = rot * s[L.b(i)];
        ds[L.b(i)] = -rot * s[L.a(i)];
        ydx += s[L.y(i)] * (2.0 * s[L.b(i)]);
    }
    ds[L.z()] = 2.0 * c + ydx;
    ds[L.c()] = 0.0;
}

using Rate = std::function<void(const std::vector<double>&, std::vector<double>&)>;

Trajectory run_rk4(const MagneticIVP& ivp, const Rate& rate, const char* label) {
    ivp.validate();
    const Layout L{ivp.n};
    const long long steps = std::llround(ivp.t_max / ivp.dt);

    std::vector<double> s(L.size()), k1(L.size()), k2(L.size()), k3(L.size()), k4(L.size()), tmp(L.size());
    pack(L, ivp.p0, ivp.v0, s);

    Trajectory traj;
    traj.dt = ivp.dt;
    traj.strength = ivp.strength;
    traj.cos_theta = ivp.v0.c;
    traj.t.reserve(steps + 1);
    traj.points.reserve(steps + 1);
    traj.velocities.reserve(steps + 1);

    Point p = Point::origin(ivp.n);
    FrameTangent v = FrameTangent::zero(ivp.n);

    auto record = [&](long long k) {
        unpack(L, s, p, v);
        const double speed_defect = std::abs(metric(v, v) - 1.0);
        const double slant_defect = std::abs(v.c - traj.cos_theta);
        if (speed_defect > kAbortDefect || slant_defect > kAbortDefect) {
            std::ostringstream msg;
            msg << label << ": conservation breach at node " << k << " (t = " << k * ivp.dt
                << "): |g(E1,E1)-1| = " << speed_defect << ", |eta(E1)-cos_theta| = " << slant_defect
                << "; exceeds " << kAbortDefect;
            throw IntegrationFault(msg.str());
        }
        traj.t.push_back(static_cast<double>(k) * ivp.dt);
        traj.points.push_back(p);
        traj.velocities.push_back(v);
    };

    record(0);
    const double h = ivp.dt;
    for (long long k = 0; k < steps; ++k) {
        rate(s, k1);
        for (int j = 0; j < L.size(); ++j) tmp[j] = s[j] + 0.5 * h * k1[j];
        rate(tmp, k2);
        for (int j = 0; j < L.size(); ++j) tmp[j] = s[j] + 0.5 * h * k2[j];
        rate(tmp, k3);
        for (int j = 0; j < L.size(); ++j) tmp[j] = s[j] + h * k3[j];
        rate(tmp, k4);
        for (int j = 0; j < L.size(); ++j) {
            s[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        record(k + 1);
    }
    return traj;
}

}  // namespace

void MagneticIVP::validate() const {
    if (n < 1) throw std::invalid_argument("MagneticIVP: n must be >= 1");
    if (strength == 0.0) throw std::invalid_argument("MagneticIVP: q must be nonzero");
    if (p0.n() != n || v0.n() != n) throw std::invalid_argument("MagneticIVP: p0/v0 dimension mismatch");
    if (!(t_max > 0.0)) throw std::invalid_argument("MagneticIVP: t_max must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("MagneticIVP: dt must be positive");
    if (dt > t_max) throw std::invalid_argument("MagneticIVP: dt must not exceed t_max");
    if (std::abs(metric(v0, v0) - 1.0) > 1e-12) {
        throw std::invalid_argument("MagneticIVP: v0 must be g-unit (|g(v0,v0) - 1| <= 1e-12)");
    }
}

LorentzRate lorentz_rhs(const Point& p, const FrameTangent& v, double strength) {
    const double rot = strength - 2.0 * v.c;
    FrameTangent vr = FrameTangent::zero(v.n());
    for (int i = 0; i < v.n(); ++i) {
        vr.a[i] = rot * v.b[i];
        vr.b[i] = -rot * v.a[i];
    }
    return LorentzRate{to_coord(p, v), vr};
}

Trajectory integrate(const MagneticIVP& ivp) {
    const Layout L{ivp.n};
    const double q = ivp.strength;
    return run_rk4(
        ivp, [&L, q](const std::vector<double>& s, std::vector<double>& ds) { reduced_rate(L, q, s, ds); },
        "integrate");
}

Trajectory integrate_lc_crosscheck(const MagneticIVP& ivp) {
    const Layout L{ivp.n};
    const double q = ivp.strength;
    const int n = ivp.n;

    Point p = Point::origin(n);
    FrameTangent v = FrameTangent::zero(n);
    auto coeff = [n](const FrameTangent& u, int idx) {
        if (idx < n) return u.a[idx];
        if (idx < 2 * n) return u.b[idx - n];
        return u.c;
    };

    auto rate = [&](const std::vector<double>& s, std::vector<double>& ds) {
        unpack(L, s, p, v);
        // dE1/dt = -q phi(E1) - Gamma(E1, E1), with Gamma assembled from
        // the frame table term by term.
        FrameTangent vr = scale(-q, phi(v));
        for (int ai = 0; ai <= 2 * n; ++ai) {
            const double ca = coeff(v, ai);
            for (int bi = 0; bi <= 2 * n; ++bi) {
                axpy(vr, -ca * coeff(v, bi), lc_frame_table(n, ai, bi));
            }
        }
        const CoordTangent pr = to_coord(p, v);
        for (int i = 0; i < n; ++i) {
            ds[L.x(i)] = pr.dx[i];
            ds[L.y(i)] = pr.dy[i];
            ds[L.a(i)] = vr.a[i];
            ds[L.b(i)] = vr.b[i];
        }
        ds[L.z()] = pr.dz;
        ds[L.c()] = vr.c;
    };
    return run_rk4(ivp, rate, "integrate_lc_crosscheck");
}

}  // namespace maglab
