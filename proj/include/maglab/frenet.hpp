#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maglab/connections.hpp"
#include "maglab/trajectory.hpp"

// Frenet apparatus of a trajectory with respect to the Tanaka-Webster
// connection: the Gram-Schmidt chain
//   M2 = D E1,  k1 = |M2|,  E2 = M2/k1,
//   M3 = D E2 + k1 E1,  k2 = |M3|,  E3 = M3/k2,
//   k3 = |D E3 + k2 E2|,
// where D differentiates along the curve. A curvature whose interior mean
// falls below the geodesic threshold ends the chain.

namespace maglab {

struct CurvatureSeries {
    std::vector<double> per_node;  // on the interior stats window
    double mean = 0.0;
    double max_dev = 0.0;  // max |per_node - mean|
};

struct FrenetReport {
    int osc_order = 1;  // 1, 2, or 3
    double strength = 0.0;
    double cos_theta = 0.0;  // mean eta(E1)
    // delta = sgn(-q + 2 cos_theta), epsilon = sgn(cos_theta); 0 when the
    // sign is undefined (the corresponding magnitude is below noise).
    int delta = 0;
    int epsilon = 0;

    // interior window [first, last] used for curvature statistics
    // (boundary stencils are noisier, so the outer 10% per end is dropped)
    std::size_t first = 0;
    std::size_t last = 0;

    CurvatureSeries k1, k2, k3;  // k2/k3 empty below osc_order 2/3
    FieldAlongCurve e1, e2, e3;  // frames at every node; e2/e3 likewise

    double geodesic_threshold = 0.0;  // 1e-6 * max(1, |q|)
};

FrenetReport frenet_apparatus(const Trajectory& traj);

// Deviation of the estimated frames from their closed-form expressions
//   E2 = (delta/sin_theta) phi E1,
//   E3 = (epsilon/sin_theta) (xi - cos_theta E1),
// as max-node g-norms. r3 is absent at osc_order 2. Requires
// osc_order >= 2 and sin_theta above 1e-6 (an integral curve of xi has no
// such frame).
struct FrameResiduals {
    double r2 = 0.0;
    std::optional<double> r3;
};

FrameResiduals frame_formula_residuals(const Trajectory& traj, const FrenetReport& report);

}  // namespace maglab
