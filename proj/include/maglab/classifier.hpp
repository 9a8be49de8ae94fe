#pragma once

#include <string>

#include "maglab/frenet.hpp"
#include "maglab/trajectory.hpp"

// Classification of magnetic trajectories and strength recovery for
// phi-helices of osculating order <= 3.

namespace maglab {

enum class Branch { GeodesicXi, SlantGeodesic, LegendreCircle, SlantHelix, NotMagnetic };

std::string branch_name(Branch b);

struct Evidence {
    double cos_theta = 0.0;
    double lambda = 0.0;  // q - 2 cos_theta
    double k1 = 0.0;      // 0 when below the geodesic threshold
    double k2 = 0.0;
    double residual = 0.0;  // Lorentz equation residual
};

struct Classification {
    Branch branch = Branch::NotMagnetic;
    Evidence evidence;
};

// Equality thresholds for the angle tests (cos_theta vs 0, +-1, q/2).
// Closed-form samples sit at the roundoff floor; ODE-integrated input
// carries discretization noise, hence the two profiles.
struct Thresholds {
    double angle_eq = 1e-6;

    static Thresholds strict() { return Thresholds{1e-6}; }
    static Thresholds ode() { return Thresholds{1e-3}; }
};

// Sorts a trajectory into geodesic / Legendre circle / slant helix, or
// NotMagnetic when the Lorentz residual exceeds 1e-4 or the curvature
// estimates contradict the slant-helix formulas
//   k1 = |lambda| sin_theta,  k2 = |lambda| |cos_theta|.
Classification classify(const Trajectory& traj, double strength,
                        const Thresholds& tol = Thresholds::strict());

// Helix invariants handed to strength recovery. delta is the sign of
// g(phi E1, E2) and epsilon the sign of cos_theta (0 = undefined).
struct HelixData {
    double k1 = 0.0;
    double k2 = 0.0;
    double cos_theta = 0.0;
    int delta = 0;
    int epsilon = 0;

    // Throws std::invalid_argument on inconsistent data (k2 > 0 without
    // k1 > 0, |cos_theta| > 1, or epsilon disagreeing with cos_theta).
    static HelixData make(double k1, double k2, double cos_theta, int delta, int epsilon);
};

// Snapped helix data from Frenet estimates: curvatures below the geodesic
// threshold become 0, cos_theta near 0/+-1 snaps exactly, delta is
// measured as the sign of the mean g(phi E1, E2).
HelixData helix_from_report(const FrenetReport& report, const Thresholds& tol = Thresholds::strict());

struct StrengthResult {
    enum class Kind { ArbitraryQ, UniqueQ, None };
    Kind kind = Kind::None;
    double value = 0.0;  // meaningful for UniqueQ only
};

// The strength q for which the given phi-helix is a magnetic curve:
//   |cos_theta| = 1                  -> any q
//   k1 = 0, cos_theta not in {-1,0,1} -> q = 2 cos_theta
//   cos_theta = 0, k1 > 0, k2 = 0    -> q = -delta k1
//   k2 > 0, cos_theta = eps k2/sqrt(k1^2+k2^2)
//                                    -> q = -delta sqrt(k1^2+k2^2)
//                                           + 2 eps k2/sqrt(k1^2+k2^2)
//   otherwise                        -> none.
// hypothesis_tol loosens the last case's equality test for estimated
// (rather than exact) helix data.
StrengthResult strength_for_phi_helix(const HelixData& h, double hypothesis_tol = 1e-9);

// Forward-then-inverse consistency: generate the closed-form curve for
// (strength, theta, n), estimate its helix data, recover the strength.
// True when the recovered q matches within 1e-3 (or when sin_theta = 0
// and any q is admissible).
bool roundtrip_check(double strength, double theta, int n);

}  // namespace maglab
