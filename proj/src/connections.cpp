#include "maglab/connections.hpp"

#include <cmath>
#include <stdexcept>

namespace maglab {

namespace {

void require_grid(const Trajectory& traj, const FieldAlongCurve& field) {
    if (traj.size() < 5) {
        throw std::invalid_argument("covariant_along: grid too short (need >= 5 nodes)");
    }
    if (field.size() != traj.size()) {
        throw std::invalid_argument("covariant_along: field not sampled on the trajectory grid");
    }
    if (!traj.uniform_grid()) {
        throw std::invalid_argument("covariant_along: non-uniform grid rejected");
    }
}

// 4th-order stencil for node k of an N-node grid, as (offset, weights/12h).
// Interior: centered 5-point; ends: one-sided 5-point of the same order.
struct Stencil {
    int start;
    double w[5];
};

Stencil stencil_at(std::size_t k, std::size_t count) {
    const std::size_t last = count - 1;
    if (k == 0) return {0, {-25.0, 48.0, -36.0, 16.0, -3.0}};
    if (k == 1) return {0, {-3.0, -10.0, 18.0, -6.0, 1.0}};
    if (k == last - 1) return {static_cast<int>(count) - 5, {-1.0, 6.0, -18.0, 10.0, 3.0}};
    if (k == last) return {static_cast<int>(count) - 5, {3.0, -16.0, 36.0, -48.0, 25.0}};
    return {static_cast<int>(k) - 2, {1.0, -8.0, 0.0, 8.0, -1.0}};
}

// d/dt of the sampled frame components at node k.
FrameTangent frame_derivative(const FieldAlongCurve& field, std::size_t k, double dt) {
    const Stencil s = stencil_at(k, field.size());
    const int n = field.samples.front().n();
    FrameTangent out = FrameTangent::zero(n);
    for (int j = 0; j < 5; ++j) {
        axpy(out, s.w[j], field.samples[static_cast<std::size_t>(s.start + j)]);
    }
    return scale(1.0 / (12.0 * dt), out);
}

// sum_{a,b} E1^a V^b lc_frame_table(a, b), assembled generically.
FrameTangent lc_gamma(int n, const FrameTangent& e1, const FrameTangent& v) {
    FrameTangent out = FrameTangent::zero(n);
    auto coeff = [n](const FrameTangent& u, int idx) {
        if (idx < n) return u.a[idx];
        if (idx < 2 * n) return u.b[idx - n];
        return u.c;
    };
    for (int ai = 0; ai <= 2 * n; ++ai) {
        const double ca = coeff(e1, ai);
        if (ca == 0.0) continue;
        for (int bi = 0; bi <= 2 * n; ++bi) {
            const double cb = coeff(v, bi);
            if (cb == 0.0) continue;
            axpy(out, ca * cb, lc_frame_table(n, ai, bi));
        }
    }
    return out;
}

}  // namespace

FrameTangent lc_frame_table(int n, int a_idx, int b_idx) {
    if (n < 1 || a_idx < 0 || a_idx > 2 * n || b_idx < 0 || b_idx > 2 * n) {
        throw std::invalid_argument("lc_frame_table: frame index out of range");
    }
    FrameTangent out = FrameTangent::zero(n);
    const int xi = 2 * n;
    if (a_idx < n) {
        if (b_idx >= n && b_idx < xi && b_idx - n == a_idx) out.c = 1.0;   // (X_i, X_{n+i}) -> xi
        if (b_idx == xi) out.b[a_idx] = -1.0;                              // (X_i, xi) -> -X_{n+i}
    } else if (a_idx < xi) {
        const int i = a_idx - n;
        if (b_idx < n && b_idx == i) out.c = -1.0;  // (X_{n+i}, X_i) -> -xi
        if (b_idx == xi) out.a[i] = 1.0;            // (X_{n+i}, xi) -> X_i
    } else {
        if (b_idx < n) out.b[b_idx] = -1.0;             // (xi, X_i) -> -X_{n+i}
        if (b_idx >= n && b_idx < xi) out.a[b_idx - n] = 1.0;  // (xi, X_{n+i}) -> X_i
    }
    return out;
}

FieldAlongCurve covariant_along(const Trajectory& traj, const FieldAlongCurve& field, ConnectionKind kind) {
    require_grid(traj, field);
    const int n = traj.n();
    FieldAlongCurve out;
    out.samples.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        FrameTangent d = frame_derivative(field, k, traj.dt);
        if (kind == ConnectionKind::LeviCivita) {
            d = add(d, lc_gamma(n, traj.velocities[k], field.samples[k]));
        }
        out.samples.push_back(std::move(d));
    }
    return out;
}

FieldAlongCurve covariant_along_tw_via_lc(const Trajectory& traj, const FieldAlongCurve& field) {
    FieldAlongCurve out = covariant_along(traj, field, ConnectionKind::LeviCivita);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const FrameTangent& e1 = traj.velocities[k];
        const FrameTangent& v = field.samples[k];
        FrameTangent& d = out.samples[k];
        axpy(d, eta(e1), phi(v));
        axpy(d, eta(v), phi(e1));
        d.c -= metric(phi(e1), v);
    }
    return out;
}

FrameTangent torsion_tw(const FrameTangent& v, const FrameTangent& w) {
    FrameTangent out = FrameTangent::zero(v.n());
    out.c = 2.0 * metric(v, phi(w));
    return out;
}

std::vector<double> differentiate_samples(const std::vector<double>& f, double dt) {
    if (f.size() < 5) {
        throw std::invalid_argument("differentiate_samples: need >= 5 samples");
    }
    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Stencil s = stencil_at(k, f.size());
        double acc = 0.0;
        for (int j = 0; j < 5; ++j) acc += s.w[j] * f[static_cast<std::size_t>(s.start + j)];
        out[k] = acc / (12.0 * dt);
    }
    return out;
}

}  // namespace maglab
