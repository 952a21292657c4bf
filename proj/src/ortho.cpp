#include "linnik/ortho.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "linnik/modsurf.hpp"

namespace linnik {

namespace {

i64 pos_mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

OrthoBasis ortho_basis(const PrimVec3& v)
{
    OrthoBasis b;
    b.v = v;
    if (v.x == 0 && v.y == 0) {
        // v = (0,0,+-1)
        if (v.z == 1) {
            b.v1 = {1, 0, 0};
            b.v2 = {0, 1, 0};
        } else {
            b.v1 = {0, 1, 0};
            b.v2 = {1, 0, 0};
        }
        b.w = {0, 0, v.z};
        return b;
    }
    // column-reduce v^t to (0,0,1) tracking the kernel columns
    auto [g1, s, t] = ext_gcd(v.x, v.y);
    Vec3 k1{v.y / g1, -v.x / g1, 0};
    auto [g, u, ww] = ext_gcd(g1, v.z);
    assert(g == 1);
    Vec3 wcol{u * s, u * t, ww};
    Vec3 k2{v.z * s, v.z * t, -g1};
    i64 d = det3(k1, k2, wcol);
    assert(d == 1 || d == -1);
    if (d == 1) {
        b.v1 = k1;
        b.v2 = k2;
    } else {
        b.v1 = k2;
        b.v2 = k1;
    }
    b.w = wcol;
    return b;
}

BQF raw_gram(const OrthoBasis& b)
{
    return {dot(b.v1, b.v1), 2 * dot(b.v1, b.v2), dot(b.v2, b.v2)};
}

BQF raw_gram(const PrimVec3& v) { return raw_gram(ortho_basis(v)); }

BQF gram_form(const PrimVec3& v)
{
    BQF q = raw_gram(v);
    if (v.D % 4 != 3) return q;
    if (q.a % 2 != 0 || q.c % 2 != 0)
        throw ClaimViolation("gram_form: halving parity fails for D = 3 mod 4");
    return {q.a / 2, q.b / 2, q.c / 2};
}

namespace {

Vec3 rotate_fwd(const Vec3& a) { return {a.y, a.z, a.x}; }
Vec3 rotate_bwd(const Vec3& a) { return {a.z, a.x, a.y}; }

// core solve for v.z != 0
Vec3 solve_cross_core(const Vec3& v, const Vec3& w)
{
    const i64 a = v.x, b = v.y, c = v.z;
    const i64 f = w.x, g = w.y;
    const i64 m = c < 0 ? -c : c;
    // b t = f (mod m)
    auto [d, x0, y0] = ext_gcd(b, m);
    (void)y0;
    if (d == 0) d = m; // b == 0 and m == 0 cannot happen (c != 0)
    if (f % d != 0) throw std::logic_error("solve_cross: divisibility failure");
    i64 t0 = m == d ? 0 : pos_mod(i64(i128(pos_mod(x0, m)) * pos_mod(f / d, m) % m), m);
    i64 step = m / d;
    // a (t0 + k step) = -g (mod m)
    i64 A = pos_mod(i64(i128(a) * step % m), m);
    i64 B = pos_mod(i64((-i128(g) - i128(a) * t0) % m), m);
    i64 k = 0;
    if (m > 1) {
        auto [d2, x1, y1] = ext_gcd(A, m);
        (void)y1;
        if (d2 == 0) d2 = m;
        if (B % d2 != 0) throw std::logic_error("solve_cross: second congruence unsolvable");
        i64 m2 = m / d2;
        if (m2 > 1) k = pos_mod(i64(i128(pos_mod(x1, m2)) * pos_mod(B / d2, m2) % m2), m2);
    }
    i64 t = t0 + k * step;
    i64 s = (b * t - f) / c;
    i64 r = (g + a * t) / c;
    return {r, s, t};
}

} // namespace

Vec3 solve_cross(const PrimVec3& pv, const Vec3& w)
{
    Vec3 v = pv.vec();
    if (dot(v, w) != 0)
        throw std::invalid_argument("solve_cross: w must be orthogonal to v");
    // cyclic rotation is orientation preserving, so cross commutes with it
    int rot = 0;
    Vec3 vr = v, wr = w;
    while (vr.z == 0) {
        vr = rotate_fwd(vr);
        wr = rotate_fwd(wr);
        ++rot;
    }
    Vec3 u = solve_cross_core(vr, wr);
    for (; rot > 0; --rot) u = rotate_bwd(u);
    if (!(cross(v, u) == w)) throw std::logic_error("solve_cross: verification failed");
    return u;
}

namespace {

// all W with small entries, det +-1, preserving the reduced form q
std::vector<UniWord> form_automorphisms(const BQF& q)
{
    std::vector<UniWord> out;
    for (i64 p = -2; p <= 2; ++p)
        for (i64 r = -2; r <= 2; ++r)
            for (i64 s = -2; s <= 2; ++s)
                for (i64 t = -2; t <= 2; ++t) {
                    i64 det = p * t - r * s;
                    if (det != 1 && det != -1) continue;
                    UniWord w{{{p, s}, {r, t}}};
                    if (transform(q, w) == q) out.push_back(w);
                }
    return out;
}

} // namespace

GridPoint grid_point(const OrthoBasis& b)
{
    const i64 D = static_cast<i64>(b.v.D);
    BQF q = raw_gram(b);
    const i64 bh = q.b / 2;
    const i64 r1 = dot(b.w, b.v1);
    const i64 r2 = dot(b.w, b.v2);
    // t = adj(Gram) r / det(Gram), det(Gram) = D exactly
    i64 n1 = pos_mod(q.c * r1 - bh * r2, D);
    i64 n2 = pos_mod(-bh * r1 + q.a * r2, D);

    auto [red, u] = reduce_form(q);
    auto apply_inv = [&](const UniWord& w, i64 a1, i64 a2, i64 eps) {
        // numerators transformed by w^{-1} = eps * adj(w)
        i64 b1 = eps * (w.m[1][1] * a1 - w.m[0][1] * a2);
        i64 b2 = eps * (-w.m[1][0] * a1 + w.m[0][0] * a2);
        return std::pair<i64, i64>{pos_mod(b1, D), pos_mod(b2, D)};
    };
    auto [t1, t2] = apply_inv(u, n1, n2, u.det());

    std::pair<i64, i64> best{-1, -1};
    for (const UniWord& w : form_automorphisms(red)) {
        auto cand = apply_inv(w, t1, t2, w.det());
        if (best.first < 0 || cand < best) best = cand;
    }

    GridPoint gp;
    gp.shape = b.v.D % 4 == 3 ? BQF{red.a / 2, red.b / 2, red.c / 2} : red;
    i64 g = gcd3(best.first, best.second, D);
    gp.num1 = best.first / g;
    gp.num2 = best.second / g;
    gp.den = D / g;
    return gp;
}

GridPoint grid_point(const PrimVec3& v) { return grid_point(ortho_basis(v)); }

BQF projection_form(const PrimVec3& v)
{
    OrthoBasis b = ortho_basis(v);
    Mat3i M = Mat3i::from_columns(b.v1, b.v2, b.w);
    Mat3i inv = M.adjugate(); // det M = 1
    Vec3 u1 = inv.row(0), u2 = inv.row(1);
    assert(inv.row(2) == v.vec());
    const i64 D = static_cast<i64>(v.D);
    Vec3 vv = v.vec();
    i64 a = D * dot(u1, u1) - dot(u1, vv) * dot(u1, vv);
    i64 c = D * dot(u2, u2) - dot(u2, vv) * dot(u2, vv);
    i64 bb = 2 * (D * dot(u1, u2) - dot(u1, vv) * dot(u2, vv));
    return {a, bb, c};
}

} // namespace linnik
