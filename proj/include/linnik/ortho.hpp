#pragma once

#include "linnik/bqf.hpp"
#include "linnik/sphere.hpp"

namespace linnik {

// Oriented integral basis of the orthogonal lattice Z^3 cap v-perp,
// plus a completion vector w with <w,v> = 1.
//
// Invariants: <v1,v> = <v2,v> = 0, det(v1,v2,w) = +1 (so v1,v2 span the
// full rank-2 lattice), det(v1,v2,v) = D > 0.
struct OrthoBasis {
    PrimVec3 v;
    Vec3 v1, v2, w;
};

OrthoBasis ortho_basis(const PrimVec3& v);

// Gram form of (v1,v2): (<v1,v1>, 2<v1,v2>, <v2,v2>), discriminant -4D.
BQF raw_gram(const PrimVec3& v);
BQF raw_gram(const OrthoBasis& b);

// The attached form q_v: the raw Gram form when D = 1,2 mod 4
// (disc -4D), and the halved form when D = 3 mod 4 (disc -D).
// Throws ClaimViolation if the halving parity fails.
BQF gram_form(const PrimVec3& v);

// Integer u with v x u = w, for w in Z^3 cap v-perp. Constructive
// divisibility solve; rejects <w,v> != 0.
Vec3 solve_cross(const PrimVec3& v, const Vec3& w);

// Marked torus point of the orthogonal grid: coordinates of the
// projection of w onto v-perp in the basis (v1,v2), mod 1, in lowest
// terms (den divides D). Canonicalized so the value is independent of
// the choices of w and basis.
struct GridPoint {
    BQF shape;       // reduced form of q_v
    i64 num1 = 0;    // t = (num1/den, num2/den) mod 1, 0 <= num < den
    i64 num2 = 0;
    i64 den = 1;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

GridPoint grid_point(const PrimVec3& v);
// same, for an explicitly chosen basis/completion (used by invariance tests)
GridPoint grid_point(const OrthoBasis& b);

// Exact D-scaled Gram form of the projection of Z^3 onto v-perp.
// Independent oracle for the shape equality in the coefficient theorem:
// its reduced form equals the reduced raw Gram form.
BQF projection_form(const PrimVec3& v);

} // namespace linnik
