#pragma once

#include <vector>

#include "maglab/model_space.hpp"
#include "maglab/trajectory.hpp"

// Covariant differentiation along discretized curves.
//
// The Levi-Civita connection of R^{2n+1}(-3) acts on the orthonormal frame
// through a constant table (lc_frame_table); the Tanaka-Webster connection
// annihilates every frame field, so along a curve it reduces to plain
// componentwise differentiation of frame components. The Tanaka-Webster
// derivative is also reachable through the Levi-Civita route plus the
// structure correction
//   eta(X) phi Y + eta(Y) phi X - g(phi X, Y) xi,
// and both routes must agree to discretization error.

namespace maglab {

enum class ConnectionKind { LeviCivita, TanakaWebster };

// Vector field sampled on the grid of a Trajectory, one frame tangent
// per node.
struct FieldAlongCurve {
    std::vector<FrameTangent> samples;

    std::size_t size() const { return samples.size(); }
};

// Levi-Civita derivative of one frame field along another, as a constant
// frame tangent. Indices: 0..n-1 are X_1..X_n, n..2n-1 are X_{n+1}..X_{2n},
// 2n is xi. Nonzero entries:
//   (X_i, X_{n+i}) -> xi     (X_{n+i}, X_i) -> -xi
//   (X_i, xi) -> -X_{n+i}    (xi, X_i) -> -X_{n+i}
//   (X_{n+i}, xi) -> X_i     (xi, X_{n+i}) -> X_i
FrameTangent lc_frame_table(int n, int a_idx, int b_idx);

// Covariant derivative of a sampled field along the trajectory tangent.
// Componentwise d/dt uses 4th-order central differences at interior nodes
// and one-sided 4th-order stencils at the two nodes of each end; the grid
// must be uniform with at least 5 nodes. TanakaWebster differentiates
// frame components directly (all frame table entries vanish).
FieldAlongCurve covariant_along(const Trajectory& traj, const FieldAlongCurve& field, ConnectionKind kind);

// Tanaka-Webster derivative evaluated through the Levi-Civita table plus
// the structure correction; must agree with
// covariant_along(..., TanakaWebster) to <= 1e-7 per component.
FieldAlongCurve covariant_along_tw_via_lc(const Trajectory& traj, const FieldAlongCurve& field);

// Torsion of the Tanaka-Webster connection: T(V, W) = 2 g(V, phi W) xi.
// Antisymmetric; vanishes whenever either argument is xi.
FrameTangent torsion_tw(const FrameTangent& v, const FrameTangent& w);

// 4th-order derivative of scalar samples on a uniform grid (same stencils
// as covariant_along); exposed for residual checks on scalar invariants.
std::vector<double> differentiate_samples(const std::vector<double>& f, double dt);

}  // namespace maglab
