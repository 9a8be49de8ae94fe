#pragma once

#include <vector>

#include "maglab/model_space.hpp"
#include "maglab/trajectory.hpp"

// Exact magnetic curves of R^{2n+1}(-3). The solutions split on the
// rotation rate lambda = q - 2 cos(theta):
//
//   Rotating (lambda != 0):
//     alpha_i     = (c_i/lambda) sin(lambda t + d_i) + h_i
//     alpha_{n+i} = (-c_i/lambda) cos(lambda t + d_i) + h_{n+i}
//     alpha_z     = 2 t cos(theta)
//                   + sum_i { -c_i^2/(4 lambda^2) [2(lambda t + d_i) + sin(2(lambda t + d_i))]
//                             + (c_i h_{n+i}/lambda) sin(lambda t + d_i) }
//                   + h_{2n+1}
//     with sum_{i<=n} c_i^2 = 4 sin^2(theta).
//
//   Linear (lambda = 0, i.e. q = 2 cos(theta)):
//     alpha_i = c_i t + d_i  (i = 1..2n)
//     alpha_z = 2 t cos(theta) + sum_{i<=n} c_i (c_{n+i} t^2/2 + d_{n+i} t) + c_{2n+1}
//     with q^2 + sum_{i<=2n} c_i^2 = 4.

namespace maglab {

enum class CurveBranch { Rotating, Linear };

struct CurveSpec {
    int n = 1;
    double strength = 0.0;  // q
    double theta = 0.0;     // contact angle, radians in [0, pi]
    CurveBranch branch = CurveBranch::Rotating;

    // Rotating: c has n amplitudes, d has n phases (stored mod 2 pi),
    //           h has 2n+1 position offsets.
    // Linear:   c has 2n+1 slopes (last entry is the z offset constant),
    //           d has 2n intercepts, h is unused.
    std::vector<double> c;
    std::vector<double> d;
    std::vector<double> h;

    double rotation_rate() const;  // lambda = q - 2 cos(theta)

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    static CurveSpec rotating(int n, double strength, double theta, std::vector<double> amp,
                              std::vector<double> phase, std::vector<double> offset);
    static CurveSpec linear(int n, double strength, double theta, std::vector<double> slope,
                            std::vector<double> intercept);

    // Canonical spec with amplitude spread evenly across the phi-planes,
    // zero phases and offsets; selects the branch from lambda.
    static CurveSpec even_split(int n, double strength, double theta);
};

// Curve point with its first two coordinate derivatives.
struct CurveEval {
    Point position;
    CoordTangent velocity;
    CoordTangent acceleration;
};

// Closed-form evaluation at arc length t.
CurveEval generate(const CurveSpec& spec, double t);

// Uniform sampling of the closed form over [0, t_max]; velocities are the
// coordinate velocities converted to the frame.
Trajectory sample(const CurveSpec& spec, double t_max, double dt);

// Max over interior nodes of the g-norm of
//   TW-derivative of E1 along E1  minus  (-q + 2 cos_theta) phi E1,
// with cos_theta taken from the trajectory. Callers threshold it.
double lorentz_residual(const Trajectory& traj, double strength);

}  // namespace maglab
