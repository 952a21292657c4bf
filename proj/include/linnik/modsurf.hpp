#pragma once

#include <utility>

#include "linnik/ortho.hpp"

namespace linnik {

// point x + iy of the upper half plane
struct HPoint {
    double x = 0;
    double y = 1;
    bool reduced = false;
};

// element of SL2(Z), row major, det 1
struct UniWord {
    i64 m[2][2] = {{1, 0}, {0, 1}};

    i64 det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    UniWord inverse() const { return UniWord{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }
    friend UniWord operator*(const UniWord& a, const UniWord& b);
};

// Moebius action of a real 2x2 matrix with positive determinant.
HPoint moebius(double a, double b, double c, double d, const HPoint& z);
HPoint moebius(const UniWord& w, const HPoint& z);

// q composed with U: q'(X,Y) = q(U11 X + U12 Y, U21 X + U22 Y).
BQF transform(const BQF& q, const UniWord& u);

// Root of q(X,1) in the upper half plane: (-b + i sqrt(|disc|)) / 2a.
// Rejects forms that are not positive definite.
HPoint form_root(const BQF& q);

// Reduce z into the standard fundamental domain -1/2 <= x < 1/2,
// |z| >= 1, keeping x <= 0 on the unit circle (matches the b >= 0
// convention for reduced forms, so the two reduction paths agree on the
// nose). Returns (z_red, W) with z_red = W . z.
std::pair<HPoint, UniWord> reduce_point(HPoint z);

// Exact reduction of a positive definite form. Returns (r, U) with
// r = transform(q, U) reduced.
std::pair<BQF, UniWord> reduce_form(BQF q);

// Rotation k_v in SO(3) with k_v . v = ||v|| e3 (rows orthonormal,
// det +1), built by Gram-Schmidt on the oriented orthogonal basis.
Mat3d rotation_to_e3(const PrimVec3& v);

double hyperbolic_distance(const HPoint& z1, const HPoint& z2);

// Residual of the Heegner-point identity: hyperbolic distance between
// the reduced Moebius image N_v^{-1}.i (N_v from the rotated basis) and
// the reduced root of the raw Gram form.
double heegner_residual(const PrimVec3& v);

struct HeegnerReport {
    PrimVec3 v;
    HPoint lattice_side; // reduced N_v^{-1}.i
    HPoint form_side;    // reduced root of Q_v
    double residual = 0;
    bool pass = false;
};

HeegnerReport heegner_identity_check(const PrimVec3& v, double tol);

} // namespace linnik
