#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <random>

#include "maglab/closed_form.hpp"
#include "maglab/connections.hpp"
#include "maglab/integrator.hpp"

using namespace maglab;

namespace {

std::mt19937_64 rng(20240803);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// unit frame tangent with a prescribed xi component
FrameTangent random_unit_velocity(int n, double cos_theta) {
    FrameTangent v = FrameTangent::zero(n);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        v.a[i] = uniform(-1.0, 1.0);
        v.b[i] = uniform(-1.0, 1.0);
        norm2 += v.a[i] * v.a[i] + v.b[i] * v.b[i];
    }
    const double target = std::sqrt(1.0 - cos_theta * cos_theta);
    const double s = target / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) {
        v.a[i] *= s;
        v.b[i] *= s;
    }
    v.c = cos_theta;
    // renormalize the plane part so the full norm is 1 to roundoff
    double plane2 = 0.0;
    for (int i = 0; i < n; ++i) plane2 += v.a[i] * v.a[i] + v.b[i] * v.b[i];
    const double fix = std::sqrt((1.0 - cos_theta * cos_theta) / plane2);
    for (int i = 0; i < n; ++i) {
        v.a[i] *= fix;
        v.b[i] *= fix;
    }
    return v;
}

double max_point_diff(const Point& p, const Point& q) {
    double m = std::abs(p.z - q.z);
    for (int i = 0; i < p.n(); ++i) {
        m = std::max(m, std::abs(p.x[i] - q.x[i]));
        m = std::max(m, std::abs(p.y[i] - q.y[i]));
    }
    return m;
}

}  // namespace

TEST_SUITE("integrator") {

TEST_CASE("lorentz right-hand side") {
    // along xi the force vanishes and the point moves straight up in z
    const Point origin = Point::origin(2);
    const LorentzRate r1 = lorentz_rhs(origin, FrameTangent::xi(2), 3.0);
    CHECK(g_norm(r1.velocity_rate) == 0.0);
    CHECK(r1.position_rate.dz == 2.0);
    for (int i = 0; i < 2; ++i) {
        CHECK(r1.position_rate.dx[i] == 0.0);
        CHECK(r1.position_rate.dy[i] == 0.0);
    }

    // q = 2c makes the rotation coefficient vanish (slant geodesics)
    FrameTangent slanted = FrameTangent::zero(1);
    slanted.c = 0.5;
    slanted.b[0] = std::sqrt(0.75);
    CHECK(g_norm(lorentz_rhs(Point::origin(1), slanted, 1.0).velocity_rate) == 0.0);

    // a' = (q - 2c) b, b' = (2c - q) a
    FrameTangent legendre = FrameTangent::basis(1, 2);
    const LorentzRate r2 = lorentz_rhs(Point::origin(1), legendre, 1.0);
    CHECK(r2.velocity_rate.a[0] == 1.0);
    CHECK(r2.velocity_rate.b[0] == 0.0);
    CHECK(r2.velocity_rate.c == 0.0);
}

TEST_CASE("integral curve of xi is a straight line") {
    MagneticIVP ivp;
    ivp.n = 1;
    ivp.strength = 2.5;
    ivp.p0 = Point::origin(1);
    ivp.p0.x[0] = 0.25;
    ivp.v0 = FrameTangent::xi(1);
    ivp.t_max = 5.0;
    ivp.dt = 1e-2;

    const Trajectory traj = integrate(ivp);
    REQUIRE(traj.size() == 501);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        CHECK(std::abs(traj.points[k].z - 2.0 * traj.t[k]) <= 1e-12);
        CHECK(traj.points[k].x[0] == 0.25);
        CHECK(traj.points[k].y[0] == 0.0);
    }

    const Trajectory cross = integrate_lc_crosscheck(ivp);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        CHECK(max_point_diff(traj.points[k], cross.points[k]) <= 1e-12);
    }
}

TEST_CASE("integration reproduces the closed form (legendre circle)") {
    // strength 1 at theta = pi/2: amplitude c_1 = 2, rotation rate 1
    const CurveSpec spec = CurveSpec::even_split(1, 1.0, std::numbers::pi / 2.0);
    const CurveEval start = generate(spec, 0.0);

    MagneticIVP ivp;
    ivp.n = 1;
    ivp.strength = 1.0;
    ivp.p0 = start.position;
    ivp.v0 = to_frame(start.position, start.velocity);
    ivp.t_max = 10.0;
    ivp.dt = 1e-3;

    const Trajectory traj = integrate(ivp);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        worst = std::max(worst, max_point_diff(traj.points[k], generate(spec, traj.t[k]).position));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("integration reproduces the closed form (n = 2 slant helix)") {
    const CurveSpec spec = CurveSpec::even_split(2, 3.0, std::numbers::pi / 3.0);
    const CurveEval start = generate(spec, 0.0);

    MagneticIVP ivp;
    ivp.n = 2;
    ivp.strength = 3.0;
    ivp.p0 = start.position;
    ivp.v0 = to_frame(start.position, start.velocity);
    ivp.t_max = 10.0;
    ivp.dt = 1e-3;

    const Trajectory traj = integrate(ivp);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        worst = std::max(worst, max_point_diff(traj.points[k], generate(spec, traj.t[k]).position));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("conserved quantities stay conserved") {
    for (int round = 0; round < 4; ++round) {
        MagneticIVP ivp;
        ivp.n = 1 + static_cast<int>(rng() % 2);
        ivp.strength = uniform(0.5, 3.0) * (rng() % 2 ? 1.0 : -1.0);
        ivp.p0 = Point::origin(ivp.n);
        ivp.v0 = random_unit_velocity(ivp.n, uniform(-0.9, 0.9));
        ivp.t_max = 10.0;
        ivp.dt = 1e-3;

        const Trajectory traj = integrate(ivp);
        CHECK(traj.max_speed_defect() <= 1e-8);
        CHECK(traj.max_slant_defect() <= 1e-10);

        // each phi-plane keeps its share of the speed
        std::vector<double> amp0(ivp.n);
        for (int i = 0; i < ivp.n; ++i) {
            amp0[i] = ivp.v0.a[i] * ivp.v0.a[i] + ivp.v0.b[i] * ivp.v0.b[i];
        }
        for (const auto& v : traj.velocities) {
            for (int i = 0; i < ivp.n; ++i) {
                CHECK(std::abs(v.a[i] * v.a[i] + v.b[i] * v.b[i] - amp0[i]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("endpoint error shrinks at 4th order") {
    // strength 6 at theta = pi/3 keeps the rotation rate at 5, so the
    // halving ratio is resolved far above roundoff
    const CurveSpec spec = CurveSpec::even_split(1, 6.0, std::numbers::pi / 3.0);
    const CurveEval start = generate(spec, 0.0);
    auto endpoint_error = [&](double dt) {
        MagneticIVP ivp;
        ivp.n = 1;
        ivp.strength = 6.0;
        ivp.p0 = start.position;
        ivp.v0 = to_frame(start.position, start.velocity);
        ivp.t_max = 10.0;
        ivp.dt = dt;
        const Trajectory traj = integrate(ivp);
        return max_point_diff(traj.points.back(), generate(spec, traj.t.back()).position);
    };
    const double e1 = endpoint_error(2e-3);
    const double e2 = endpoint_error(1e-3);
    const double ratio = e1 / e2;
    CHECK(ratio >= 14.0);
    CHECK(ratio <= 18.0);
}

TEST_CASE("generic levi-civita assembly matches the reduced rate") {
    for (int round = 0; round < 20; ++round) {
        MagneticIVP ivp;
        ivp.n = 1 + static_cast<int>(rng() % 3);
        ivp.strength = uniform(0.5, 3.0) * (rng() % 2 ? 1.0 : -1.0);
        ivp.p0 = Point::origin(ivp.n);
        for (int i = 0; i < ivp.n; ++i) {
            ivp.p0.x[i] = uniform(-1, 1);
            ivp.p0.y[i] = uniform(-1, 1);
        }
        ivp.v0 = random_unit_velocity(ivp.n, uniform(-0.9, 0.9));
        ivp.t_max = 5.0;
        ivp.dt = 1e-3;

        const Trajectory a = integrate(ivp);
        const Trajectory b = integrate_lc_crosscheck(ivp);
        REQUIRE(a.size() == b.size());
        double worst = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            worst = std::max(worst, max_point_diff(a.points[k], b.points[k]));
            worst = std::max(worst, g_norm(sub(a.velocities[k], b.velocities[k])));
        }
        CHECK(worst <= 1e-9);

        // the xi components of the assembled quadratic term cancel
        for (std::size_t k = 0; k < b.size(); ++k) {
            const FrameTangent& v = b.velocities[k];
            double xi_part = 0.0;
            auto coeff = [&](const FrameTangent& u, int idx) {
                if (idx < ivp.n) return u.a[idx];
                if (idx < 2 * ivp.n) return u.b[idx - ivp.n];
                return u.c;
            };
            for (int ai = 0; ai <= 2 * ivp.n; ++ai) {
                for (int bi = 0; bi <= 2 * ivp.n; ++bi) {
                    xi_part += coeff(v, ai) * coeff(v, bi) * lc_frame_table(ivp.n, ai, bi).c;
                }
            }
            CHECK(std::abs(xi_part) <= 1e-12);
        }
    }
}

TEST_CASE("invalid problems are rejected") {
    MagneticIVP ivp;
    ivp.n = 1;
    ivp.strength = 0.0;
    ivp.p0 = Point::origin(1);
    ivp.v0 = FrameTangent::xi(1);
    ivp.t_max = 1.0;
    ivp.dt = 1e-2;
    CHECK_THROWS_WITH_AS(integrate(ivp), "MagneticIVP: q must be nonzero", std::invalid_argument);

    ivp.strength = 1.0;
    ivp.dt = 2.0;
    CHECK_THROWS_AS(integrate(ivp), std::invalid_argument);

    ivp.dt = 1e-2;
    ivp.v0.c = 1.1;
    CHECK_THROWS_AS(integrate(ivp), std::invalid_argument);
}

TEST_CASE("conservation breach aborts with a diagnostic") {
    // a step far too coarse for the rotation rate destroys unit speed
    MagneticIVP ivp;
    ivp.n = 1;
    ivp.strength = 60.0;
    ivp.p0 = Point::origin(1);
    ivp.v0 = FrameTangent::basis(1, 2);
    ivp.t_max = 5.0;
    ivp.dt = 0.5;
    CHECK_THROWS_AS(integrate(ivp), IntegrationFault);
}

}  // TEST_SUITE
