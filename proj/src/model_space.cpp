#include "maglab/model_space.hpp"

#include <cmath>
#include <stdexcept>

namespace maglab {

FrameTangent FrameTangent::basis(int n, int index) {
    if (index < 1 || index > 2 * n) {
        throw std::invalid_argument("frame basis index out of range 1..2n");
    }
    FrameTangent v = zero(n);
    if (index <= n) {
        v.a[index - 1] = 1.0;
    } else {
        v.b[index - n - 1] = 1.0;
    }
    return v;
}

FrameTangent to_frame(const Point& p, const CoordTangent& v) {
    const int n = v.n();
    FrameTangent out = FrameTangent::zero(n);
    double ydx = 0.0;
    for (int i = 0; i < n; ++i) {
        out.a[i] = 0.5 * v.dy[i];
        out.b[i] = 0.5 * v.dx[i];
        ydx += p.y[i] * v.dx[i];
    }
    out.c = 0.5 * (v.dz - ydx);
    return out;
}

CoordTangent to_coord(const Point& p, const FrameTangent& v) {
    const int n = v.n();
    CoordTangent out = CoordTangent::zero(n);
    double ydx = 0.0;
    for (int i = 0; i < n; ++i) {
        out.dx[i] = 2.0 * v.b[i];
        out.dy[i] = 2.0 * v.a[i];
        ydx += p.y[i] * out.dx[i];
    }
    out.dz = 2.0 * v.c + ydx;
    return out;
}

double eta(const FrameTangent& v) { return v.c; }

double eta(const Point& p, const CoordTangent& v) {
    double ydx = 0.0;
    for (int i = 0; i < v.n(); ++i) {
        ydx += p.y[i] * v.dx[i];
    }
    return 0.5 * (v.dz - ydx);
}

double metric(const FrameTangent& v, const FrameTangent& w) {
    double s = 0.0;
    for (int i = 0; i < v.n(); ++i) s += v.a[i] * w.a[i];
    for (int i = 0; i < v.n(); ++i) s += v.b[i] * w.b[i];
    return s + v.c * w.c;
}

double g_norm(const FrameTangent& v) { return std::sqrt(metric(v, v)); }

FrameTangent phi(const FrameTangent& v) {
    const int n = v.n();
    FrameTangent out = FrameTangent::zero(n);
    for (int i = 0; i < n; ++i) {
        out.a[i] = -v.b[i];
        out.b[i] = v.a[i];
    }
    return out;
}

double fundamental_two_form(const FrameTangent& v, const FrameTangent& w) { return metric(v, phi(w)); }

FrameTangent add(const FrameTangent& v, const FrameTangent& w) {
    FrameTangent out = v;
    for (int i = 0; i < v.n(); ++i) {
        out.a[i] += w.a[i];
        out.b[i] += w.b[i];
    }
    out.c += w.c;
    return out;
}

FrameTangent sub(const FrameTangent& v, const FrameTangent& w) {
    FrameTangent out = v;
    for (int i = 0; i < v.n(); ++i) {
        out.a[i] -= w.a[i];
        out.b[i] -= w.b[i];
    }
    out.c -= w.c;
    return out;
}

FrameTangent scale(double s, const FrameTangent& v) {
    FrameTangent out = v;
    for (int i = 0; i < v.n(); ++i) {
        out.a[i] *= s;
        out.b[i] *= s;
    }
    out.c *= s;
    return out;
}

void axpy(FrameTangent& v, double s, const FrameTangent& w) {
    for (int i = 0; i < v.n(); ++i) {
        v.a[i] += s * w.a[i];
        v.b[i] += s * w.b[i];
    }
    v.c += s * w.c;
}

}  // namespace maglab
