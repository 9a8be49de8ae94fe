#pragma once

#include <cstddef>
#include <vector>

#include "maglab/model_space.hpp"

namespace maglab {

// Discretized curve on a uniform arc-length grid. Velocities are frame
// tangents; for magnetic curves they stay g-unit and their xi component
// stays equal to cos_theta at every node.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<Point> points;
    std::vector<FrameTangent> velocities;

    double strength = 0.0;   // magnetic strength q
    double cos_theta = 0.0;  // eta(E1) at t = 0

    std::size_t size() const { return t.size(); }
    int n() const { return points.empty() ? 0 : points.front().n(); }

    // Grid gaps within rel_tol of dt (uniform spacing contract).
    bool uniform_grid(double rel_tol = 1e-9) const;

    // Largest deviation of g(E1,E1) from 1 over all nodes.
    double max_speed_defect() const;
    // Largest deviation of eta(E1) from cos_theta over all nodes.
    double max_slant_defect() const;
};

}  // namespace maglab
