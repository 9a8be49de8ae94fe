#pragma once

#include <cstddef>
#include <vector>

// Contact metric structure of the Sasakian model space R^{2n+1}(-3).
//
// Coordinates are (x_1..x_n, y_1..y_n, z). The structure tensors are
//   eta = (dz - sum_i y_i dx_i) / 2,          xi = 2 d/dz,
//   g   = eta (x) eta + (sum_i dx_i^2 + dy_i^2) / 4,
// and phi rotates the contact distribution. The g-orthonormal frame
//   X_i = 2 d/dy_i,   X_{n+i} = phi X_i = 2 (d/dx_i + y_i d/dz),   xi
// is the canonical internal representation: in it g is the identity and
// phi is the constant block rotation (a, b, c) -> (-b, a, 0). Coordinate
// components appear only at I/O boundaries.

namespace maglab {

// Point of R^{2n+1}: x and y hold n entries each.
struct Point {
    std::vector<double> x;
    std::vector<double> y;
    double z = 0.0;

    int n() const { return static_cast<int>(x.size()); }

    static Point origin(int n) { return Point{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0}; }
};

// Tangent vector in the coordinate basis: dx_i, dy_i, dz components.
struct CoordTangent {
    std::vector<double> dx;
    std::vector<double> dy;
    double dz = 0.0;

    int n() const { return static_cast<int>(dx.size()); }

    static CoordTangent zero(int n) {
        return CoordTangent{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0};
    }
};

// Tangent vector in the orthonormal frame:
//   a_i along X_i,  b_i along X_{n+i} = phi X_i,  c along xi.
// g-norm^2 = sum a_i^2 + sum b_i^2 + c^2.
struct FrameTangent {
    std::vector<double> a;
    std::vector<double> b;
    double c = 0.0;

    int n() const { return static_cast<int>(a.size()); }

    static FrameTangent zero(int n) {
        return FrameTangent{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0};
    }
    // The frame field xi, i.e. (a, b, c) = (0, 0, 1).
    static FrameTangent xi(int n) {
        FrameTangent v = zero(n);
        v.c = 1.0;
        return v;
    }
    // Unit frame field X_i (index 1..n) or X_{n+i} (index n+1..2n).
    static FrameTangent basis(int n, int index);
};

// Frame components of a coordinate tangent at p:
//   b_i = dx_i / 2,  a_i = dy_i / 2,  c = (dz - sum_i y_i dx_i) / 2.
FrameTangent to_frame(const Point& p, const CoordTangent& v);

// Coordinate components of a frame tangent at p; inverse of to_frame:
//   dx_i = 2 b_i,  dy_i = 2 a_i,  dz = 2 c + 2 sum_i b_i y_i.
CoordTangent to_coord(const Point& p, const FrameTangent& v);

// Contact form. In the frame this is just the xi component.
double eta(const FrameTangent& v);
double eta(const Point& p, const CoordTangent& v);

// Riemannian metric g; the frame is orthonormal, so this is the dot
// product of frame components.
double metric(const FrameTangent& v, const FrameTangent& w);

// g-norm of a frame tangent.
double g_norm(const FrameTangent& v);

// The structure tensor phi: (a, b, c) -> (-b, a, 0).
// Satisfies phi^2 V = -V + eta(V) xi and phi(xi) = 0.
FrameTangent phi(const FrameTangent& v);

// Fundamental 2-form Omega(V, W) = g(V, phi W). Antisymmetric;
// the argument order fixes every downstream sign convention.
double fundamental_two_form(const FrameTangent& v, const FrameTangent& w);

// --- frame tangent arithmetic -------------------------------------------

FrameTangent add(const FrameTangent& v, const FrameTangent& w);
FrameTangent sub(const FrameTangent& v, const FrameTangent& w);
FrameTangent scale(double s, const FrameTangent& v);
// v += s * w
void axpy(FrameTangent& v, double s, const FrameTangent& w);

}  // namespace maglab
