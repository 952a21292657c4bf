#include "linnik/modsurf.hpp"

#include <cmath>
#include <stdexcept>

namespace linnik {

UniWord operator*(const UniWord& a, const UniWord& b)
{
    UniWord r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

HPoint moebius(double a, double b, double c, double d, const HPoint& z)
{
    // (a z + b) / (c z + d), det assumed > 0
    double nx = a * z.x + b, ny = a * z.y;
    double dx = c * z.x + d, dy = c * z.y;
    double den = dx * dx + dy * dy;
    return {(nx * dx + ny * dy) / den, (ny * dx - nx * dy) / den, false};
}

HPoint moebius(const UniWord& w, const HPoint& z)
{
    return moebius(static_cast<double>(w.m[0][0]), static_cast<double>(w.m[0][1]),
                   static_cast<double>(w.m[1][0]), static_cast<double>(w.m[1][1]), z);
}

BQF transform(const BQF& q, const UniWord& u)
{
    i64 p = u.m[0][0], r = u.m[1][0], s = u.m[0][1], t = u.m[1][1];
    i64 a = q.a * p * p + q.b * p * r + q.c * r * r;
    i64 c = q.a * s * s + q.b * s * t + q.c * t * t;
    i64 b = 2 * q.a * p * s + q.b * (p * t + s * r) + 2 * q.c * r * t;
    return {a, b, c};
}

HPoint form_root(const BQF& q)
{
    if (!q.positive_definite())
        throw std::invalid_argument("form_root: form must be positive definite");
    double a2 = 2.0 * static_cast<double>(q.a);
    return {-static_cast<double>(q.b) / a2,
            std::sqrt(static_cast<double>(-q.disc())) / a2, false};
}

std::pair<HPoint, UniWord> reduce_point(HPoint z)
{
    if (!(z.y > 0)) throw std::invalid_argument("reduce_point: y must be positive");
    UniWord w;
    const double eps = 1e-12;
    for (int iter = 0; iter < 10000; ++iter) {
        double n = std::floor(z.x + 0.5);
        if (n != 0) {
            z.x -= n;
            UniWord t{{{1, -static_cast<i64>(n)}, {0, 1}}};
            w = t * w;
        }
        double norm = z.x * z.x + z.y * z.y;
        if (norm < 1.0 - eps) {
            UniWord s{{{0, -1}, {1, 0}}};
            z = moebius(s, z);
            w = s * w;
            continue;
        }
        break;
    }
    // half-open vertical boundary
    if (z.x >= 0.5 - eps) {
        z.x -= 1.0;
        UniWord t{{{1, -1}, {0, 1}}};
        w = t * w;
    }
    // on the unit circle keep the representative with x <= 0
    double norm = z.x * z.x + z.y * z.y;
    if (std::abs(norm - 1.0) <= 4 * eps && z.x > eps) {
        UniWord s{{{0, -1}, {1, 0}}};
        z = moebius(s, z);
        w = s * w;
        if (z.x >= 0.5 - eps) { // corner
            z.x -= 1.0;
            UniWord t{{{1, -1}, {0, 1}}};
            w = t * w;
        }
    }
    z.reduced = true;
    return {z, w};
}

std::pair<BQF, UniWord> reduce_form(BQF q)
{
    if (!q.positive_definite())
        throw std::invalid_argument("reduce_form: form must be positive definite");
    UniWord u; // q_original composed with u gives the current form
    for (;;) {
        // translate b into (-a, a]
        i64 two_a = 2 * q.a;
        i64 r = ((q.b % two_a) + two_a) % two_a;
        if (r > q.a) r -= two_a;
        if (r != q.b) {
            i64 t = (r - q.b) / two_a;
            i64 c = i64((i128(q.a) * t + q.b) * t + q.c); // wide intermediates
            q = {q.a, r, c};
            UniWord tr{{{1, t}, {0, 1}}};
            u = u * tr;
        }
        if (q.a > q.c) {
            q = {q.c, -q.b, q.a};
            UniWord s{{{0, -1}, {1, 0}}};
            u = u * s;
            continue;
        }
        break;
    }
    if (q.b == -q.a) {
        q = {q.a, q.a, q.c};
        UniWord tr{{{1, 1}, {0, 1}}};
        u = u * tr;
    }
    if (q.a == q.c && q.b < 0) {
        q = {q.a, -q.b, q.c};
        UniWord s{{{0, -1}, {1, 0}}};
        u = u * s;
    }
    return {q, u};
}

Mat3d rotation_to_e3(const PrimVec3& v)
{
    OrthoBasis b = ortho_basis(v);
    auto norm = [](const std::array<double, 3>& a) {
        return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    };
    std::array<double, 3> r1{static_cast<double>(b.v1.x), static_cast<double>(b.v1.y),
                             static_cast<double>(b.v1.z)};
    std::array<double, 3> r2{static_cast<double>(b.v2.x), static_cast<double>(b.v2.y),
                             static_cast<double>(b.v2.z)};
    std::array<double, 3> r3{static_cast<double>(v.x), static_cast<double>(v.y),
                             static_cast<double>(v.z)};
    double n1 = norm(r1);
    for (auto& t : r1) t /= n1;
    double d = r2[0] * r1[0] + r2[1] * r1[1] + r2[2] * r1[2];
    for (int i = 0; i < 3; ++i) r2[i] -= d * r1[i];
    double n2 = norm(r2);
    for (auto& t : r2) t /= n2;
    double n3 = norm(r3);
    for (auto& t : r3) t /= n3;
    return {r1, r2, r3};
}

double hyperbolic_distance(const HPoint& z1, const HPoint& z2)
{
    double dx = z1.x - z2.x, dy = z1.y - z2.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z1.y * z2.y));
}

HeegnerReport heegner_identity_check(const PrimVec3& v, double tol)
{
    HeegnerReport rep;
    rep.v = v;
    OrthoBasis b = ortho_basis(v);
    Mat3d k = rotation_to_e3(v);
    auto apply = [&](const Vec3& u) {
        std::array<double, 3> r{};
        for (int i = 0; i < 3; ++i)
            r[i] = k[i][0] * u.x + k[i][1] * u.y + k[i][2] * u.z;
        return r;
    };
    auto kv1 = apply(b.v1);
    auto kv2 = apply(b.v2);
    // N_v columns are the first two entries of k v1, k v2
    double alpha = kv1[0], beta = kv2[0], gamma = kv1[1], delta = kv2[1];
    // N^{-1} . i = (delta i - beta) / (-gamma i + alpha)
    HPoint lattice = moebius(delta, -beta, -gamma, alpha, HPoint{0, 1});
    rep.lattice_side = reduce_point(lattice).first;
    rep.form_side = reduce_point(form_root(raw_gram(b))).first;
    rep.residual = hyperbolic_distance(rep.lattice_side, rep.form_side);
    rep.pass = rep.residual < tol;
    return rep;
}

double heegner_residual(const PrimVec3& v)
{
    return heegner_identity_check(v, 1e-9).residual;
}

} // namespace linnik
