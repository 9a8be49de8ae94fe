#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maglab/classifier.hpp"
#include "maglab/closed_form.hpp"

using namespace maglab;

namespace {

constexpr double kPi = std::numbers::pi;

Trajectory xi_line(std::size_t nodes) {
    Trajectory traj;
    traj.dt = 1e-2;
    traj.strength = 2.0;
    traj.cos_theta = 1.0;
    for (std::size_t k = 0; k < nodes; ++k) {
        traj.t.push_back(static_cast<double>(k) * traj.dt);
        Point p = Point::origin(1);
        p.z = 2.0 * traj.t.back();
        traj.points.push_back(p);
        traj.velocities.push_back(FrameTangent::xi(1));
    }
    return traj;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("classify sorts the three magnetic families") {
    CHECK(classify(xi_line(200), 2.0).branch == Branch::GeodesicXi);
    CHECK(classify(xi_line(200), -0.3).branch == Branch::GeodesicXi);

    // q = 1 = 2 cos(pi/3): zero rotation rate, straight slant line
    const Trajectory line = sample(CurveSpec::even_split(1, 1.0, kPi / 3.0), 5.0, 1e-3);
    const Classification slant = classify(line, 1.0);
    CHECK(slant.branch == Branch::SlantGeodesic);
    CHECK(std::abs(slant.evidence.cos_theta - 0.5) <= 1e-9);
    CHECK(std::abs(slant.evidence.lambda) <= 1e-9);

    const Trajectory circle = sample(CurveSpec::even_split(1, -2.0, kPi / 2.0), 5.0, 1e-3);
    CHECK(classify(circle, -2.0).branch == Branch::LegendreCircle);

    const Trajectory helix = sample(CurveSpec::even_split(1, 3.0, kPi / 3.0), 5.0, 1e-3);
    const Classification c = classify(helix, 3.0);
    CHECK(c.branch == Branch::SlantHelix);
    CHECK(std::abs(c.evidence.k1 - std::sqrt(3.0)) <= 1e-4);
    CHECK(std::abs(c.evidence.k2 - 1.0) <= 1e-4);
    CHECK(c.evidence.residual <= 1e-6);
}

TEST_CASE("wrong strength is not magnetic") {
    const Trajectory helix = sample(CurveSpec::even_split(1, 3.0, kPi / 3.0), 5.0, 1e-3);
    CHECK(classify(helix, 2.0).branch == Branch::NotMagnetic);
}

TEST_CASE("helix data validation") {
    CHECK_THROWS_AS(HelixData::make(0.0, 1.0, 0.3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(HelixData::make(1.0, 1.0, 0.5, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(HelixData::make(1.0, 0.0, 1.5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(HelixData::make(-1.0, 0.0, 0.0, 1, 0), std::invalid_argument);
}

TEST_CASE("strength recovery cases") {
    // |cos(theta)| = 1: any strength works
    CHECK(strength_for_phi_helix(HelixData::make(0.0, 0.0, 1.0, 0, 1)).kind ==
          StrengthResult::Kind::ArbitraryQ);
    CHECK(strength_for_phi_helix(HelixData::make(2.0, 1.0, -1.0, 1, -1)).kind ==
          StrengthResult::Kind::ArbitraryQ);

    // slant geodesic: q = 2 cos(theta)
    const StrengthResult b = strength_for_phi_helix(HelixData::make(0.0, 0.0, 0.5, 0, 1));
    CHECK(b.kind == StrengthResult::Kind::UniqueQ);
    CHECK(b.value == doctest::Approx(1.0));

    // legendre circle: q = -delta k1
    const StrengthResult c = strength_for_phi_helix(HelixData::make(2.0, 0.0, 0.0, 1, 0));
    CHECK(c.kind == StrengthResult::Kind::UniqueQ);
    CHECK(c.value == doctest::Approx(-2.0));

    // slant helix: q = -delta sqrt(k1^2 + k2^2) + 2 eps k2 / sqrt(k1^2 + k2^2)
    const StrengthResult d = strength_for_phi_helix(HelixData::make(std::sqrt(3.0), 1.0, 0.5, -1, 1));
    CHECK(d.kind == StrengthResult::Kind::UniqueQ);
    CHECK(d.value == doctest::Approx(3.0));

    // inconsistent angle/curvature data admits no strength
    const StrengthResult e = strength_for_phi_helix(HelixData::make(1.0, 1.0, 0.3, 1, 1));
    CHECK(e.kind == StrengthResult::Kind::None);
}

TEST_CASE("round trips recover the generating strength") {
    CHECK(roundtrip_check(3.0, kPi / 3.0, 1));
    CHECK(roundtrip_check(1.0, kPi / 2.0, 2));
    CHECK(roundtrip_check(std::sqrt(2.0), kPi / 4.0, 1));  // q = 2 cos(theta), zero curvature
    CHECK(roundtrip_check(2.0, 0.0, 1));                   // xi line, arbitrary strength
}

TEST_CASE("round trips hold across the parameter grid") {
    for (double q : {-3.0, -1.0, -0.5, 0.5, 1.0, 3.0}) {
        for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0}) {
            for (int n : {1, 2}) {
                CAPTURE(q);
                CAPTURE(theta);
                CAPTURE(n);
                CHECK(roundtrip_check(q, theta, n));
            }
        }
    }
}

TEST_CASE("slant helices satisfy the recovery hypothesis") {
    for (double q : {-3.0, 0.5, 3.0}) {
        for (double theta : {kPi / 6.0, kPi / 3.0, 2.0 * kPi / 3.0}) {
            if (std::abs(q - 2.0 * std::cos(theta)) < 1e-2) continue;
            const Trajectory traj = sample(CurveSpec::even_split(1, q, theta), 5.0, 1e-3);
            const Classification c = classify(traj, q);
            if (c.branch != Branch::SlantHelix) continue;
            const double norm = std::hypot(c.evidence.k1, c.evidence.k2);
            const double eps = c.evidence.cos_theta > 0 ? 1.0 : -1.0;
            CHECK(std::abs(c.evidence.cos_theta - eps * c.evidence.k2 / norm) <= 1e-3);
        }
    }
}

TEST_CASE("the closed-form grid classifies exhaustively") {
    for (double q : {-3.0, -1.0, -0.5, 0.5, 1.0, 3.0}) {
        for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0}) {
            for (int n : {1, 2}) {
                CAPTURE(q);
                CAPTURE(theta);
                CAPTURE(n);
                const Trajectory traj = sample(CurveSpec::even_split(n, q, theta), 5.0, 1e-3);
                const Branch b = classify(traj, q).branch;
                const bool magnetic = b == Branch::GeodesicXi || b == Branch::SlantGeodesic ||
                                      b == Branch::LegendreCircle || b == Branch::SlantHelix;
                CHECK(magnetic);
            }
        }
    }
}

}  // TEST_SUITE
