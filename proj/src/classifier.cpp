#include "maglab/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "maglab/closed_form.hpp"

namespace maglab {

namespace {

constexpr double kResidualMax = 1e-4;   // magnetic acceptance on the Lorentz residual
constexpr double kCurvatureEq = 1e-3;   // curvature-formula verification
}  // namespace

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::GeodesicXi: return "geodesic_xi";
        case Branch::SlantGeodesic: return "slant_geodesic";
        case Branch::LegendreCircle: return "legendre_circle";
        case Branch::SlantHelix: return "slant_helix";
        case Branch::NotMagnetic: return "not_magnetic";
    }
    return "unknown";
}

Classification classify(const Trajectory& traj, double strength, const Thresholds& tol) {
    const FrenetReport rep = frenet_apparatus(traj);
    const double residual = lorentz_residual(traj, strength);

    Classification out;
    Evidence& ev = out.evidence;
    ev.cos_theta = rep.cos_theta;
    ev.lambda = strength - 2.0 * rep.cos_theta;
    ev.k1 = rep.osc_order >= 2 ? rep.k1.mean : 0.0;
    ev.k2 = rep.osc_order >= 3 ? rep.k2.mean : 0.0;
    ev.residual = residual;

    if (residual > kResidualMax) {
        out.branch = Branch::NotMagnetic;
        return out;
    }
    // geodesic branches take precedence when thresholds overlap
    if (std::abs(std::abs(ev.cos_theta) - 1.0) <= tol.angle_eq) {
        out.branch = Branch::GeodesicXi;
        return out;
    }
    if (rep.osc_order < 2) {
        out.branch = std::abs(ev.cos_theta - strength / 2.0) <= tol.angle_eq ? Branch::SlantGeodesic
                                                                             : Branch::NotMagnetic;
        return out;
    }
    if (std::abs(ev.cos_theta) <= tol.angle_eq) {
        out.branch = std::abs(ev.k1 - std::abs(strength)) <= kCurvatureEq ? Branch::LegendreCircle
                                                                          : Branch::NotMagnetic;
        return out;
    }
    const double st = std::sqrt(1.0 - ev.cos_theta * ev.cos_theta);
    const bool k1_ok = std::abs(ev.k1 - std::abs(ev.lambda) * st) <= kCurvatureEq;
    const bool k2_ok = std::abs(ev.k2 - std::abs(ev.lambda) * std::abs(ev.cos_theta)) <= kCurvatureEq;
    out.branch = (k1_ok && k2_ok) ? Branch::SlantHelix : Branch::NotMagnetic;
    return out;
}

HelixData HelixData::make(double k1, double k2, double cos_theta, int delta, int epsilon) {
    if (k1 < 0.0 || k2 < 0.0) throw std::invalid_argument("HelixData: curvatures must be >= 0");
    if (k2 > 0.0 && k1 == 0.0) throw std::invalid_argument("HelixData: k2 > 0 requires k1 > 0");
    if (std::abs(cos_theta) > 1.0) throw std::invalid_argument("HelixData: |cos_theta| must be <= 1");
    if (cos_theta != 0.0 && epsilon != (cos_theta > 0.0 ? 1 : -1)) {
        throw std::invalid_argument("HelixData: epsilon inconsistent with sgn(cos_theta)");
    }
    return HelixData{k1, k2, cos_theta, delta, epsilon};
}

HelixData helix_from_report(const FrenetReport& report, const Thresholds& tol) {
    double k1 = report.osc_order >= 2 ? report.k1.mean : 0.0;
    double k2 = report.osc_order >= 3 ? report.k2.mean : 0.0;
    if (k1 < report.geodesic_threshold) k1 = 0.0;
    if (k2 < report.geodesic_threshold) k2 = 0.0;

    double ct = report.cos_theta;
    if (std::abs(ct) <= tol.angle_eq) ct = 0.0;
    if (std::abs(ct - 1.0) <= tol.angle_eq) ct = 1.0;
    if (std::abs(ct + 1.0) <= tol.angle_eq) ct = -1.0;

    // delta from the measured frames, not from q: sgn(<g(phi E1, E2)>)
    int delta = 0;
    if (report.osc_order >= 2) {
        double acc = 0.0;
        for (std::size_t k = 0; k < report.e2.size(); ++k) {
            acc += fundamental_two_form(report.e2.samples[k], report.e1.samples[k]);
        }
        delta = acc > 0.0 ? 1 : (acc < 0.0 ? -1 : 0);
    }
    const int epsilon = ct == 0.0 ? 0 : (ct > 0.0 ? 1 : -1);
    return HelixData::make(k1, k2, ct, delta, epsilon);
}

StrengthResult strength_for_phi_helix(const HelixData& h, double hypothesis_tol) {
    if (std::abs(h.cos_theta) == 1.0) {
        return StrengthResult{StrengthResult::Kind::ArbitraryQ, 0.0};
    }
    if (h.k1 == 0.0) {
        if (h.cos_theta == 0.0) return StrengthResult{StrengthResult::Kind::None, 0.0};
        return StrengthResult{StrengthResult::Kind::UniqueQ, 2.0 * h.cos_theta};
    }
    if (h.cos_theta == 0.0 && h.k2 == 0.0) {
        return StrengthResult{StrengthResult::Kind::UniqueQ, -static_cast<double>(h.delta) * h.k1};
    }
    if (h.k2 > 0.0) {
        const double norm = std::sqrt(h.k1 * h.k1 + h.k2 * h.k2);
        const double predicted = static_cast<double>(h.epsilon) * h.k2 / norm;
        if (std::abs(h.cos_theta - predicted) <= hypothesis_tol) {
            const double q =
                -static_cast<double>(h.delta) * norm + 2.0 * static_cast<double>(h.epsilon) * h.k2 / norm;
            return StrengthResult{StrengthResult::Kind::UniqueQ, q};
        }
    }
    return StrengthResult{StrengthResult::Kind::None, 0.0};
}

bool roundtrip_check(double strength, double theta, int n) {
    if (strength == 0.0 || n < 1) return false;
    const CurveSpec spec = CurveSpec::even_split(n, strength, theta);
    const Trajectory traj = sample(spec, 10.0, 1e-3);
    const FrenetReport rep = frenet_apparatus(traj);
    const HelixData h = helix_from_report(rep, Thresholds::strict());
    // estimated curvatures satisfy the recovery hypotheses only to their
    // own noise floor, hence the loose hypothesis tolerance here
    const StrengthResult r = strength_for_phi_helix(h, 1e-3);
    if (r.kind == StrengthResult::Kind::ArbitraryQ) {
        return std::abs(std::sin(theta)) <= 1e-9;
    }
    return r.kind == StrengthResult::Kind::UniqueQ && std::abs(r.value - strength) <= 1e-3;
}

}  // namespace maglab
