#include "maglab/frenet.hpp"

#include <cmath>
#include <stdexcept>

namespace maglab {

namespace {

int sign_of(double x, double floor_mag) {
    if (std::abs(x) < floor_mag) return 0;
    return x > 0.0 ? 1 : -1;
}

CurvatureSeries stats_on_window(const std::vector<double>& per_node_all, std::size_t first, std::size_t last) {
    CurvatureSeries s;
    s.per_node.assign(per_node_all.begin() + static_cast<std::ptrdiff_t>(first),
                      per_node_all.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    double sum = 0.0;
    for (double v : s.per_node) sum += v;
    s.mean = sum / static_cast<double>(s.per_node.size());
    for (double v : s.per_node) s.max_dev = std::max(s.max_dev, std::abs(v - s.mean));
    return s;
}

std::vector<double> node_norms(const FieldAlongCurve& f) {
    std::vector<double> out;
    out.reserve(f.size());
    for (const auto& v : f.samples) out.push_back(g_norm(v));
    return out;
}

FieldAlongCurve normalized(const FieldAlongCurve& f, const std::vector<double>& norms) {
    FieldAlongCurve out;
    out.samples.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        out.samples.push_back(scale(1.0 / norms[k], f.samples[k]));
    }
    return out;
}

}  // namespace

FrenetReport frenet_apparatus(const Trajectory& traj) {
    if (traj.size() < 9) {
        throw std::invalid_argument("frenet_apparatus: trajectory too short (need >= 9 nodes)");
    }
    for (const auto& v : traj.velocities) {
        if (std::abs(metric(v, v) - 1.0) > 1e-3) {
            throw std::invalid_argument("frenet_apparatus: degenerate node (velocity not g-unit)");
        }
    }

    FrenetReport rep;
    rep.strength = traj.strength;
    rep.geodesic_threshold = 1e-6 * std::max(1.0, std::abs(traj.strength));
    rep.e1.samples = traj.velocities;

    double eta_sum = 0.0;
    for (const auto& v : traj.velocities) eta_sum += eta(v);
    rep.cos_theta = eta_sum / static_cast<double>(traj.size());
    rep.delta = sign_of(-traj.strength + 2.0 * rep.cos_theta, 1e-12);
    rep.epsilon = sign_of(rep.cos_theta, 1e-8);

    const std::size_t margin = traj.size() / 10;
    rep.first = margin;
    rep.last = traj.size() - 1 - margin;

    const FieldAlongCurve m2 = covariant_along(traj, rep.e1, ConnectionKind::TanakaWebster);
    const std::vector<double> k1_all = node_norms(m2);
    rep.k1 = stats_on_window(k1_all, rep.first, rep.last);
    if (rep.k1.mean < rep.geodesic_threshold) {
        rep.osc_order = 1;
        return rep;
    }

    rep.e2 = normalized(m2, k1_all);
    FieldAlongCurve m3 = covariant_along(traj, rep.e2, ConnectionKind::TanakaWebster);
    for (std::size_t k = 0; k < m3.size(); ++k) {
        axpy(m3.samples[k], k1_all[k], rep.e1.samples[k]);
    }
    const std::vector<double> k2_all = node_norms(m3);
    rep.k2 = stats_on_window(k2_all, rep.first, rep.last);
    if (rep.k2.mean < rep.geodesic_threshold) {
        rep.osc_order = 2;
        rep.k2 = CurvatureSeries{};
        return rep;
    }

    rep.e3 = normalized(m3, k2_all);
    FieldAlongCurve m4 = covariant_along(traj, rep.e3, ConnectionKind::TanakaWebster);
    for (std::size_t k = 0; k < m4.size(); ++k) {
        axpy(m4.samples[k], k2_all[k], rep.e2.samples[k]);
    }
    rep.k3 = stats_on_window(node_norms(m4), rep.first, rep.last);
    rep.osc_order = 3;
    return rep;
}

FrameResiduals frame_formula_residuals(const Trajectory& traj, const FrenetReport& report) {
    if (report.osc_order < 2) {
        throw std::invalid_argument("frame_formula_residuals: needs osc_order >= 2");
    }
    if (report.e2.size() != traj.size()) {
        throw std::invalid_argument("frame_formula_residuals: report was not built from this trajectory");
    }
    const double ct = report.cos_theta;
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    if (st <= 1e-6) {
        throw std::invalid_argument(
            "frame_formula_residuals: sin(theta) below 1e-6 (integral curve of xi; formulas singular)");
    }

    FrameResiduals res;
    const int n = traj.n();
    for (std::size_t k = 0; k < traj.size(); ++k) {
        FrameTangent r2 = report.e2.samples[k];
        axpy(r2, -static_cast<double>(report.delta) / st, phi(traj.velocities[k]));
        res.r2 = std::max(res.r2, g_norm(r2));
    }
    if (report.osc_order >= 3 && report.epsilon != 0) {
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.size(); ++k) {
            FrameTangent expected = FrameTangent::xi(n);
            axpy(expected, -ct, traj.velocities[k]);
            FrameTangent r3 = report.e3.samples[k];
            axpy(r3, -static_cast<double>(report.epsilon) / st, expected);
            worst = std::max(worst, g_norm(r3));
        }
        res.r3 = worst;
    }
    return res;
}

}  // namespace maglab
