#include "maglab/trajectory.hpp"

#include <cmath>

namespace maglab {

bool Trajectory::uniform_grid(double rel_tol) const {
    if (t.size() < 2 || dt <= 0.0) return false;
    const double tol = rel_tol * std::max(1.0, std::abs(t.back()));
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (std::abs((t[k + 1] - t[k]) - dt) > tol) return false;
    }
    return true;
}

double Trajectory::max_speed_defect() const {
    double worst = 0.0;
    for (const auto& v : velocities) {
        worst = std::max(worst, std::abs(metric(v, v) - 1.0));
    }
    return worst;
}

double Trajectory::max_slant_defect() const {
    double worst = 0.0;
    for (const auto& v : velocities) {
        worst = std::max(worst, std::abs(eta(v) - cos_theta));
    }
    return worst;
}

}  // namespace maglab
