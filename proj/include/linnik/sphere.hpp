#pragma once

#include <vector>

#include "linnik/geom.hpp"

namespace linnik {

// primitive integer vector with x^2 + y^2 + z^2 = D, gcd(x,y,z) = 1
struct PrimVec3 {
    i64 x = 0, y = 0, z = 0;
    u64 D = 0;

    Vec3 vec() const { return {x, y, z}; }
    friend bool operator==(const PrimVec3&, const PrimVec3&) = default;
};

// All primitive points of squared norm D, in lexicographic (x,y,z) order.
// Empty exactly when D is not admissible (three-squares criterion).
std::vector<PrimVec3> enumerate_sphere(u64 D);

enum class GaussBranch { mod4_12h, mod8_24h, empty, excluded_small };

struct GaussCountReport {
    u64 D = 0;
    u64 count = 0;
    u64 class_number = 0;
    GaussBranch branch = GaussBranch::empty;
    bool pass = false; // no verdict for excluded_small
};

// Gauss: for D > 3, |S^2(D)| = 12 h(-4D) when D = 1,2 mod 4 and
// 24 h(-D) when D = 3 mod 8. Caller supplies h for the right discriminant.
GaussCountReport gauss_count_check(u64 D, u64 h);

const char* to_string(GaussBranch b);

} // namespace linnik
