#pragma once

#include <stdexcept>
#include <string>

#include "maglab/model_space.hpp"
#include "maglab/trajectory.hpp"

// Numerical integration of the normal magnetic curve equation. In frame
// components the velocity ODE is the block rotation
//   a_i' = (q - 2c) b_i,   b_i' = (2c - q) a_i,   c' = 0,
// so eta(E1) is a literal state component and its conservation is exact;
// the position rate is the coordinate form of the velocity.

namespace maglab {

// Conservation failure beyond the abort threshold during integration;
// signals an implementation or step-size fault, not bad input.
struct IntegrationFault : std::runtime_error {
    explicit IntegrationFault(const std::string& what) : std::runtime_error(what) {}
};

// Initial value problem for a normal magnetic curve of strength q != 0,
// starting at p0 with g-unit frame velocity v0.
struct MagneticIVP {
    int n = 1;
    double strength = 0.0;  // q
    Point p0;
    FrameTangent v0;
    double t_max = 0.0;
    double dt = 0.0;

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

struct LorentzRate {
    CoordTangent position_rate;
    FrameTangent velocity_rate;
};

// Right-hand side of the magnetic curve ODE at (p, v).
LorentzRate lorentz_rhs(const Point& p, const FrameTangent& v, double strength);

// Fixed-step classical RK4 on the combined (point, velocity) state.
// Checks unit speed and slant at every node: drift beyond 1e-6 throws
// IntegrationFault (c' = 0 is exact in the frame ODE, so a breach means
// a fault, not roundoff).
Trajectory integrate(const MagneticIVP& ivp);

// Same ODE with the velocity rate assembled generically from
// lc_frame_table (Levi-Civita route, no pre-reduced slant constant);
// agrees with integrate to <= 1e-9 per node.
Trajectory integrate_lc_crosscheck(const MagneticIVP& ivp);

}  // namespace maglab
