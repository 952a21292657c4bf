#include "linnik/eisen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace linnik {

Mat3i complete_to_unimodular(const PrimVec3& v)
{
    OrthoBasis b = ortho_basis(v);
    // inverse of [v1 v2 w]; its third row is v since <v,v1> = <v,v2> = 0
    // and <v,w> = 1
    Mat3i g = Mat3i::from_columns(b.v1, b.v2, b.w).adjugate();
    if (g.det() != 1 || !(g.row(2) == v.vec()))
        throw std::logic_error("complete_to_unimodular: construction failed");
    return g;
}

Mat3d IwasawaParts::reconstruct() const
{
    Mat3d L{{{l11, l12, l13}, {0, l22, l23}, {0, 0, l33}}};
    return matmul(L, k);
}

IwasawaParts iwasawa(const Mat3d& g)
{
    auto dotr = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    IwasawaParts p;
    std::array<double, 3> e3 = g[2];
    p.l33 = std::sqrt(dotr(e3, e3));
    if (!(p.l33 > 1e-12)) throw std::invalid_argument("iwasawa: singular bottom row");
    for (auto& t : e3) t /= p.l33;

    std::array<double, 3> e2 = g[1];
    p.l23 = dotr(g[1], e3);
    for (int i = 0; i < 3; ++i) e2[i] -= p.l23 * e3[i];
    p.l22 = std::sqrt(dotr(e2, e2));
    if (!(p.l22 > 1e-12)) throw std::invalid_argument("iwasawa: degenerate rows");
    for (auto& t : e2) t /= p.l22;

    std::array<double, 3> e1 = g[0];
    p.l13 = dotr(g[0], e3);
    p.l12 = dotr(g[0], e2);
    for (int i = 0; i < 3; ++i) e1[i] -= p.l13 * e3[i] + p.l12 * e2[i];
    p.l11 = std::sqrt(dotr(e1, e1));
    if (!(p.l11 > 1e-12)) throw std::invalid_argument("iwasawa: degenerate rows");
    for (auto& t : e1) t /= p.l11;

    p.k = {e1, e2, e3};
    // det g = l11 l22 l33 det k; we require a rotation factor
    double detk = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1]) -
                  e1[1] * (e2[0] * e3[2] - e2[2] * e3[0]) +
                  e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
    if (detk < 0) throw std::invalid_argument("iwasawa: det g must be positive");
    return p;
}

double coefficient_a_n(u64 n, const SphHarmonic& omega, const SurfaceTestFn& phi)
{
    double sum = 0;
    for (const PrimVec3& v : enumerate_sphere(n)) {
        IwasawaParts p = iwasawa(to_double(complete_to_unimodular(v)));
        double w = sph_harm(omega, p.k[2][0], p.k[2][1], p.k[2][2]);
        sum += w * phi(reduce_point(p.m_point()).first);
    }
    return sum;
}

std::vector<CoefficientRow> coefficient_check(u64 n)
{
    std::vector<CoefficientRow> rows;
    for (const auto& [omega, phi] : standard_battery()) {
        CoefficientRow r;
        r.n = n;
        r.omega_id = omega.id();
        r.phi_id = phi.id();
        r.weyl_value = weyl_sum(n, omega, phi).sum;
        r.coeff_value = coefficient_a_n(n, omega, phi);
        r.gap = std::abs(r.weyl_value - r.coeff_value);
        rows.push_back(r);
    }
    return rows;
}

bool projection_shape_ok(const PrimVec3& v)
{
    return reduce_form(projection_form(v)).first == reduce_form(raw_gram(v)).first;
}

namespace {

int resolve_threads(int threads)
{
    if (threads > 0) return std::min(threads, 64);
    if (const char* env = std::getenv("LINNIK_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return std::min(t, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 16u)) : 1;
}

constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
constexpr int kPermSign[6] = {1, -1, -1, 1, 1, -1};

} // namespace

ScanResult partial_sum_scan(u64 X, const SphHarmonic& omega, const SurfaceTestFn& phi,
                            int threads)
{
    if (X < 10) throw std::invalid_argument("partial_sum_scan: X too small");
    ScanResult res;
    res.X = X;
    res.omega_id = omega.id();
    res.phi_id = phi.id();

    const int nt = resolve_threads(threads);
    const i64 r = static_cast<i64>(isqrt(X));
    std::vector<std::vector<double>> acc(nt, std::vector<double>(X + 1, 0.0));
    std::vector<u64> counts(nt, 0);

    auto worker = [&](int tid) {
        std::vector<double>& A = acc[tid];
        u64 cnt = 0;
        std::pair<Vec3, int> orbit[48];
        for (i64 x = tid; x <= r; x += nt) {
            const u64 x2 = static_cast<u64>(x * x);
            for (i64 y = x; x2 + static_cast<u64>(y * y) <= X; ++y) {
                const u64 xy2 = x2 + static_cast<u64>(y * y);
                for (i64 z = y; xy2 + static_cast<u64>(z * z) <= X; ++z) {
                    if (gcd3(x, y, z) != 1) continue;
                    const u64 n = xy2 + static_cast<u64>(z * z);
                    PrimVec3 v{x, y, z, n};
                    BQF q = reduce_form(raw_gram(v)).first;
                    HPoint zp = form_root(q);
                    HPoint zm = form_root(reduce_form({q.a, -q.b, q.c}).first);
                    zp.reduced = zm.reduced = true;
                    const double fp = phi(zp), fm = phi(zm);

                    // signed-permutation orbit of the canonical triple
                    const i64 t[3] = {x, y, z};
                    int no = 0;
                    const bool generic = x > 0 && x != y && y != z;
                    for (int p = 0; p < 6; ++p) {
                        for (int mask = 0; mask < 8; ++mask) {
                            const int s0 = mask & 1 ? -1 : 1;
                            const int s1 = mask & 2 ? -1 : 1;
                            const int s2 = mask & 4 ? -1 : 1;
                            Vec3 u{s0 * t[kPerm[p][0]], s1 * t[kPerm[p][1]],
                                   s2 * t[kPerm[p][2]]};
                            const int d = kPermSign[p] * s0 * s1 * s2;
                            if (!generic) {
                                bool dup = false;
                                for (int i = 0; i < no; ++i)
                                    if (orbit[i].first == u) {
                                        dup = true;
                                        break;
                                    }
                                if (dup) continue;
                            }
                            orbit[no++] = {u, d};
                        }
                    }

                    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
                    double contrib = 0;
                    for (int i = 0; i < no; ++i) {
                        const Vec3& u = orbit[i].first;
                        double w = sph_harm(omega, u.x * inv, u.y * inv, u.z * inv);
                        contrib += w * (orbit[i].second > 0 ? fp : fm);
                    }
                    A[n] += contrib;
                    cnt += static_cast<u64>(no);
                }
            }
        }
        counts[tid] = cnt;
    };

    std::vector<std::thread> pool;
    for (int tid = 1; tid < nt; ++tid) pool.emplace_back(worker, tid);
    worker(0);
    for (auto& th : pool) th.join();

    std::vector<double>& A = acc[0];
    for (int tid = 1; tid < nt; ++tid)
        for (u64 n = 1; n <= X; ++n) A[n] += acc[tid][n];
    for (int tid = 0; tid < nt; ++tid) res.point_count += counts[tid];

    // log-spaced grid, 8 points per decade from 10 to X
    std::vector<u64> grid;
    for (int i = 0;; ++i) {
        u64 g = static_cast<u64>(std::llround(std::pow(10.0, 1.0 + i / 8.0)));
        if (g >= X) break;
        if (grid.empty() || g > grid.back()) grid.push_back(g);
    }
    grid.push_back(X);

    double running = 0;
    u64 pos = 0;
    for (u64 g : grid) {
        while (pos < g) running += A[++pos];
        res.partial.emplace_back(g, running);
    }
    res.final_sum = running;

    // least squares on the top two decades, floored away from zero sums
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    u64 used = 0;
    for (const auto& [g, T] : res.partial) {
        if (g * 100 < X) continue;
        if (std::abs(T) < 1e-8) continue;
        double lx = std::log(static_cast<double>(g)), ly = std::log(std::abs(T));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++used;
    }
    res.fit_points = used;
    if (used >= 3) {
        double n = static_cast<double>(used);
        res.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        res.constant = std::exp((sy - res.exponent * sx) / n);
    }
    return res;
}

} // namespace linnik
