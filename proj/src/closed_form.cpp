#include "maglab/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maglab/connections.hpp"

namespace maglab {

namespace {

constexpr double kLambdaFloor = 1e-9;     // below this the rotating formulas are singular
constexpr double kConstraintTol = 1e-12;  // amplitude/strength constraint slack

double wrap_two_pi(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

void require_size(const std::vector<double>& v, std::size_t want, const char* name) {
    if (v.size() != want) {
        std::ostringstream msg;
        msg << "CurveSpec: " << name << " must have " << want << " entries, got " << v.size();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

double CurveSpec::rotation_rate() const { return strength - 2.0 * std::cos(theta); }

void CurveSpec::validate() const {
    if (n < 1) throw std::invalid_argument("CurveSpec: n must be >= 1");
    if (strength == 0.0) throw std::invalid_argument("CurveSpec: q must be nonzero");
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument("CurveSpec: theta must lie in [0, pi]");
    }
    const double sin2 = std::sin(theta) * std::sin(theta);
    if (branch == CurveBranch::Rotating) {
        require_size(c, static_cast<std::size_t>(n), "c");
        require_size(d, static_cast<std::size_t>(n), "d");
        require_size(h, static_cast<std::size_t>(2 * n + 1), "h");
        if (std::abs(rotation_rate()) < kLambdaFloor) {
            throw std::invalid_argument(
                "CurveSpec: |lambda| = |q - 2 cos(theta)| below 1e-9; use the linear branch");
        }
        double sum = 0.0;
        for (double ci : c) sum += ci * ci;
        if (std::abs(sum - 4.0 * sin2) > kConstraintTol) {
            throw std::invalid_argument("CurveSpec: sum(c_i^2) != 4 sin^2(theta)");
        }
    } else {
        require_size(c, static_cast<std::size_t>(2 * n + 1), "c");
        require_size(d, static_cast<std::size_t>(2 * n), "d");
        if (std::abs(strength - 2.0 * std::cos(theta)) > kConstraintTol) {
            throw std::invalid_argument("CurveSpec: linear branch requires q = 2 cos(theta)");
        }
        double sum = 0.0;
        for (int i = 0; i < 2 * n; ++i) sum += c[i] * c[i];
        if (std::abs(strength * strength + sum - 4.0) > kConstraintTol) {
            throw std::invalid_argument("CurveSpec: q^2 + sum(c_i^2) != 4");
        }
    }
}

CurveSpec CurveSpec::rotating(int n, double strength, double theta, std::vector<double> amp,
                              std::vector<double> phase, std::vector<double> offset) {
    CurveSpec spec;
    spec.n = n;
    spec.strength = strength;
    spec.theta = theta;
    spec.branch = CurveBranch::Rotating;
    spec.c = std::move(amp);
    spec.d = std::move(phase);
    spec.h = std::move(offset);
    for (double& di : spec.d) di = wrap_two_pi(di);
    spec.validate();
    return spec;
}

CurveSpec CurveSpec::linear(int n, double strength, double theta, std::vector<double> slope,
                            std::vector<double> intercept) {
    CurveSpec spec;
    spec.n = n;
    spec.strength = strength;
    spec.theta = theta;
    spec.branch = CurveBranch::Linear;
    spec.c = std::move(slope);
    spec.d = std::move(intercept);
    spec.validate();
    return spec;
}

CurveSpec CurveSpec::even_split(int n, double strength, double theta) {
    const double s = std::sin(theta);
    if (std::abs(strength - 2.0 * std::cos(theta)) < kLambdaFloor) {
        std::vector<double> slope(2 * n + 1, 0.0);
        for (int i = 0; i < 2 * n; ++i) slope[i] = 2.0 * s / std::sqrt(2.0 * n);
        return linear(n, strength, theta, std::move(slope), std::vector<double>(2 * n, 0.0));
    }
    std::vector<double> amp(n, 2.0 * s / std::sqrt(static_cast<double>(n)));
    return rotating(n, strength, theta, std::move(amp), std::vector<double>(n, 0.0),
                    std::vector<double>(2 * n + 1, 0.0));
}

CurveEval generate(const CurveSpec& spec, double t) {
    spec.validate();
    const int n = spec.n;
    const double ct = std::cos(spec.theta);
    CurveEval out{Point::origin(n), CoordTangent::zero(n), CoordTangent::zero(n)};

    if (spec.branch == CurveBranch::Rotating) {
        const double lam = spec.rotation_rate();
        double zpos = 2.0 * t * ct + spec.h[2 * n];
        double zvel = 2.0 * ct;
        double zacc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ci = spec.c[i];
            const double u = lam * t + spec.d[i];
            const double su = std::sin(u);
            const double cu = std::cos(u);
            const double hn = spec.h[n + i];

            out.position.x[i] = (ci / lam) * su + spec.h[i];
            out.position.y[i] = (-ci / lam) * cu + hn;
            out.velocity.dx[i] = ci * cu;
            out.velocity.dy[i] = ci * su;
            out.acceleration.dx[i] = -ci * lam * su;
            out.acceleration.dy[i] = ci * lam * cu;

            zpos += (-ci * ci / (4.0 * lam * lam)) * (2.0 * u + std::sin(2.0 * u)) + (ci * hn / lam) * su;
            zvel += (-ci * ci / (2.0 * lam)) * (1.0 + std::cos(2.0 * u)) + ci * hn * cu;
            zacc += ci * ci * std::sin(2.0 * u) - ci * hn * lam * su;
        }
        out.position.z = zpos;
        out.velocity.dz = zvel;
        out.acceleration.dz = zacc;
    } else {
        double zpos = 2.0 * t * ct + spec.c[2 * n];
        double zvel = 2.0 * ct;
        double zacc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ci = spec.c[i];
            const double cni = spec.c[n + i];
            out.position.x[i] = ci * t + spec.d[i];
            out.position.y[i] = cni * t + spec.d[n + i];
            out.velocity.dx[i] = ci;
            out.velocity.dy[i] = cni;

            zpos += ci * (0.5 * cni * t * t + spec.d[n + i] * t);
            zvel += ci * (cni * t + spec.d[n + i]);
            zacc += ci * cni;
        }
        out.position.z = zpos;
        out.velocity.dz = zvel;
        out.acceleration.dz = zacc;
    }
    return out;
}

Trajectory sample(const CurveSpec& spec, double t_max, double dt) {
    spec.validate();
    if (!(dt > 0.0) || !(t_max > 0.0) || dt > t_max) {
        throw std::invalid_argument("sample: need 0 < dt <= t_max");
    }
    const long long steps = std::llround(t_max / dt);

    Trajectory traj;
    traj.dt = dt;
    traj.strength = spec.strength;
    traj.t.reserve(steps + 1);
    traj.points.reserve(steps + 1);
    traj.velocities.reserve(steps + 1);
    for (long long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        CurveEval ev = generate(spec, t);
        traj.velocities.push_back(to_frame(ev.position, ev.velocity));
        traj.points.push_back(std::move(ev.position));
        traj.t.push_back(t);
    }
    traj.cos_theta = traj.velocities.front().c;
    return traj;
}

double lorentz_residual(const Trajectory& traj, double strength) {
    FieldAlongCurve e1{traj.velocities};
    const FieldAlongCurve deriv = covariant_along(traj, e1, ConnectionKind::TanakaWebster);
    const double coef = -strength + 2.0 * traj.cos_theta;
    double worst = 0.0;
    // interior nodes only: the one-sided boundary stencils carry a larger
    // error constant than the centered ones
    for (std::size_t k = 2; k + 2 < traj.size(); ++k) {
        FrameTangent r = deriv.samples[k];
        axpy(r, -coef, phi(traj.velocities[k]));
        worst = std::max(worst, g_norm(r));
    }
    return worst;
}

}  // namespace maglab
