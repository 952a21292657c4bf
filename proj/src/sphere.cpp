#include "linnik/sphere.hpp"

namespace linnik {

std::vector<PrimVec3> enumerate_sphere(u64 D)
{
    std::vector<PrimVec3> out;
    const i64 r = static_cast<i64>(isqrt(D));
    for (i64 x = -r; x <= r; ++x) {
        const u64 rem_x = D - static_cast<u64>(x * x);
        const i64 ry = static_cast<i64>(isqrt(rem_x));
        for (i64 y = -ry; y <= ry; ++y) {
            const u64 rem = rem_x - static_cast<u64>(y * y);
            const i64 s = static_cast<i64>(isqrt(rem));
            if (static_cast<u64>(s * s) != rem) continue;
            if (gcd3(x, y, s) != 1) continue;
            if (s == 0) {
                out.push_back({x, y, 0, D});
            } else {
                out.push_back({x, y, -s, D});
                out.push_back({x, y, s, D});
            }
        }
    }
    return out;
}

GaussCountReport gauss_count_check(u64 D, u64 h)
{
    GaussCountReport rep;
    rep.D = D;
    rep.count = enumerate_sphere(D).size();
    rep.class_number = h;
    if (D <= 3) {
        rep.branch = GaussBranch::excluded_small;
        rep.pass = true; // theorem silent here
        return rep;
    }
    if (!is_admissible(D)) {
        rep.branch = GaussBranch::empty;
        rep.pass = rep.count == 0;
        return rep;
    }
    if (D % 4 == 1 || D % 4 == 2) {
        rep.branch = GaussBranch::mod4_12h;
        rep.pass = rep.count == 12 * h;
    } else {
        rep.branch = GaussBranch::mod8_24h;
        rep.pass = rep.count == 24 * h;
    }
    return rep;
}

const char* to_string(GaussBranch b)
{
    switch (b) {
        case GaussBranch::mod4_12h: return "mod4_12h";
        case GaussBranch::mod8_24h: return "mod8_24h";
        case GaussBranch::empty: return "empty";
        case GaussBranch::excluded_small: return "excluded_small";
    }
    return "?";
}

} // namespace linnik
