// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit
// on any failure. Each criterion states its tolerance inline.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

#include "linnik/classgrp.hpp"
#include "linnik/eisen.hpp"

using namespace linnik;

namespace {

int failures = 0;

void report(const char* name, bool pass, const std::string& detail)
{
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
}

std::vector<u64> squarefree_admissible_upto(u64 lim)
{
    std::vector<u64> out;
    for (u64 D = 4; D <= lim; ++D)
        if (is_admissible(D) && is_squarefree(D)) out.push_back(D);
    return out;
}

u64 class_number_for(u64 D)
{
    return reduced_forms(D % 4 == 3 ? -(i64)D : -4 * (i64)D).size();
}

// 1. point counts vs 12h / 24h, squarefree admissible 3 < D <= 2000
void criterion_gauss()
{
    u64 checked = 0, bad = 0;
    for (u64 D : squarefree_admissible_upto(2000)) {
        GaussCountReport rep = gauss_count_check(D, class_number_for(D));
        ++checked;
        if (!rep.pass) ++bad;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu discriminants, %llu mismatches (exact)",
                  checked, bad);
    report("gauss-count", bad == 0 && checked > 0, buf);
}

// 2. attached form: discriminant branch, halving parity, primitivity
void criterion_attached_form()
{
    u64 checked = 0, bad = 0;
    for (u64 D : squarefree_admissible_upto(2000)) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            ++checked;
            try {
                BQF q = gram_form(v);
                i64 want = D % 4 == 3 ? -(i64)D : -4 * (i64)D;
                if (q.disc() != want || !q.primitive() || !q.positive_definite()) ++bad;
            } catch (const ClaimViolation&) {
                ++bad;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu vectors, %llu violations (exact)", checked, bad);
    report("attached-form", bad == 0 && checked > 0, buf);
}

// 3. lattice frame vs form root on the modular surface, D <= 200
void criterion_heegner()
{
    u64 checked = 0;
    double worst = 0;
    for (u64 D = 1; D <= 200; ++D) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            worst = std::max(worst, heegner_residual(v));
            ++checked;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu vectors, worst residual %.3e (tol 1e-8)",
                  checked, worst);
    report("heegner-identity", worst < 1e-8 && checked > 1000, buf);
}

// 4. shape classes form a coset of the squares subgroup, D <= 2000
void criterion_coset()
{
    u64 checked = 0, bad_coset = 0, bad_genus = 0;
    for (u64 D : squarefree_admissible_upto(2000)) {
        CosetReport rep = coset_check(D);
        ++checked;
        if (!rep.is_coset || rep.pd_size != rep.squares_size) ++bad_coset;
        if (!rep.genus_matches_r) ++bad_genus;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%llu discriminants, %llu coset failures, %llu genus-index failures",
                  checked, bad_coset, bad_genus);
    report("square-coset", bad_coset == 0 && bad_genus == 0 && checked > 0, buf);
}

// 5. coefficient battery and projection shape oracle, n <= 500
void criterion_coefficients()
{
    u64 rows = 0, shape_checked = 0, shape_bad = 0;
    double worst_gap = 0;
    for (u64 n = 1; n <= 500; ++n) {
        if (!is_admissible(n)) continue;
        for (const CoefficientRow& r : coefficient_check(n)) {
            worst_gap = std::max(worst_gap, r.gap);
            ++rows;
        }
        for (const PrimVec3& v : enumerate_sphere(n)) {
            ++shape_checked;
            if (!projection_shape_ok(v)) ++shape_bad;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%llu battery rows, worst gap %.3e (tol 1e-8); %llu shapes, %llu bad",
                  rows, worst_gap, shape_checked, shape_bad);
    report("coefficient-identity", worst_gap < 1e-8 && shape_bad == 0 && rows > 0, buf);
}

// 6. partial sum growth at X = 1e5
void criterion_scan()
{
    const u64 X = 100000;
    ScanResult triv = partial_sum_scan(X, {0, 0}, SurfaceTestFn::one());
    double ratio_triv = triv.final_sum / std::pow((double)X, 1.5);
    // density prediction (4 pi / 3) / zeta(3); the fitted constant sits
    // next to it, normalization gap flagged by printing both
    const double density = (4.0 * 3.14159265358979323846 / 3.0) / 1.2020569031595943;
    bool ok_triv = std::abs(triv.exponent - 1.5) <= 0.02;

    ScanResult harm = partial_sum_scan(X, {2, 0}, SurfaceTestFn::one());
    double ratio_harm = std::abs(harm.final_sum) / std::pow((double)X, 1.5);
    bool ok_harm = harm.exponent < 1.3 && ratio_harm < 0.05;

    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "trivial: exponent %.4f (want 1.5+-0.02), fit constant %.4f, "
                  "T/X^1.5 = %.4f vs density %.4f; Y2,0: exponent %.4f (<1.3), "
                  "|T|/X^1.5 = %.3e (<0.05)",
                  triv.exponent, triv.constant, ratio_triv, density, harm.exponent,
                  ratio_harm);
    report("partial-sum-growth", ok_triv && ok_harm, buf);
}

// 7. joint discrepancy medians over dyadic blocks, filtered family
void criterion_discrepancy_trend()
{
    CongruenceFilter f{true, {3, 5}, true};
    auto caps = standard_caps();
    auto boxes = standard_boxes();
    std::vector<double> med(14, 0);
    std::vector<u64> sizes(14, 0);
    bool nonempty = true;
    for (int k = 8; k <= 13; ++k) {
        std::vector<double> devs;
        for (u64 D = 1ull << k; D < (1ull << (k + 1)); ++D) {
            if (!passes_filter(D, f)) continue;
            devs.push_back(discrepancy(D, caps, boxes).max_joint_dev);
        }
        sizes[k] = devs.size();
        if (devs.empty()) {
            nonempty = false;
            continue;
        }
        std::nth_element(devs.begin(), devs.begin() + devs.size() / 2, devs.end());
        med[k] = devs[devs.size() / 2];
    }
    bool monotone = true;
    for (int k = 9; k <= 13; ++k) monotone = monotone && med[k] <= med[k - 1];
    bool halved = med[13] < 0.5 * med[8];
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "medians k=8..13: %.4f %.4f %.4f %.4f %.4f %.4f "
                  "(blocks %llu..%llu D); non-increasing=%d, k13 < k8/2=%d",
                  med[8], med[9], med[10], med[11], med[12], med[13], sizes[8],
                  sizes[13], (int)monotone, (int)halved);
    report("discrepancy-trend", nonempty && monotone && halved, buf);
}

// 8. algebraic property suites
void criterion_algebra()
{
    bool ok = true;
    std::string detail;

    // class group laws, exhaustively for |disc| <= 5000
    u64 groups = 0, law_bad = 0;
    for (i64 d = -3; d >= -5000; --d) {
        if (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1) continue;
        ClassGroup g(d);
        const std::size_t h = g.size();
        ++groups;
        for (std::size_t i = 0; i < h && law_bad == 0; ++i) {
            if (g.mul(g.principal(), i) != i) ++law_bad;
            if (g.mul(i, g.inv(i)) != g.principal()) ++law_bad;
            for (std::size_t j = i; j < h && law_bad == 0; ++j)
                if (g.mul(i, j) != g.mul(j, i)) ++law_bad;
        }
        for (std::size_t i = 0; i < h && law_bad == 0; ++i)
            for (std::size_t j = 0; j < h && law_bad == 0; ++j)
                for (std::size_t k = 0; k < h; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
                        ++law_bad;
                        break;
                    }
    }
    ok = ok && law_bad == 0;
    detail += "group laws: " + std::to_string(groups) + " groups, " +
              std::to_string(law_bad) + " bad; ";

    // ext_gcd / jacobi brute force
    u64 arith_bad = 0;
    for (i64 a = -80; a <= 80; ++a)
        for (i64 b = -80; b <= 80; ++b) {
            auto [g, x, y] = ext_gcd(a, b);
            if (g != std::gcd(a, b) || a * x + b * y != g) ++arith_bad;
        }
    for (u64 n = 3; n <= 201; n += 2)
        for (i64 a = -40; a <= 40; ++a) {
            // brute force: count solutions of x^2 = a (mod n) for prime n
            if (!is_prime(n)) continue;
            i64 r = ((a % (i64)n) + (i64)n) % (i64)n;
            int cnt = 0;
            for (u64 x = 0; x < n; ++x)
                if ((i64)(x * x % n) == r) ++cnt;
            int expect = r == 0 ? 0 : (cnt ? 1 : -1);
            if (jacobi(a, n) != expect) ++arith_bad;
        }
    ok = ok && arith_bad == 0;
    detail += "ext_gcd/jacobi: " + std::to_string(arith_bad) + " bad; ";

    // solve_cross on 1e4 random instances
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<i64> coef(-100000, 100000);
    const u64 Ds[] = {1, 2, 5, 14, 101, 206, 1001, 2094, 770, 4830};
    u64 cross_bad = 0;
    for (int t = 0; t < 10000; ++t) {
        auto pts = enumerate_sphere(Ds[t % 10]);
        const PrimVec3& v = pts[(std::size_t)(rng() % pts.size())];
        OrthoBasis b = ortho_basis(v);
        Vec3 w = coef(rng) * b.v1 + coef(rng) * b.v2;
        try {
            if (!(cross(v.vec(), solve_cross(v, w)) == w)) ++cross_bad;
        } catch (...) {
            ++cross_bad;
        }
    }
    ok = ok && cross_bad == 0;
    detail += "solve_cross: " + std::to_string(cross_bad) + "/10000 bad; ";

    // Iwasawa reconstruction on 1e4 random positive-determinant matrices
    std::uniform_real_distribution<double> ud(-5, 5);
    double worst_rec = 0;
    int done = 0;
    while (done < 10000) {
        Mat3d g{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g[i][j] = ud(rng);
        double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        if (det < 0.1) continue;
        Mat3d r = iwasawa(g).reconstruct();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                worst_rec = std::max(worst_rec, std::abs(r[i][j] - g[i][j]));
        ++done;
    }
    ok = ok && worst_rec < 1e-10;
    {
        char t[64];
        std::snprintf(t, sizeof t, "iwasawa worst %.2e (tol 1e-10); ", worst_rec);
        detail += t;
    }

    // odd harmonics: exact-zero sums for all D <= 1000
    double worst_odd = 0;
    SurfaceTestFn one = SurfaceTestFn::one();
    for (u64 D = 1; D <= 1000; ++D) {
        if (!is_admissible(D)) continue;
        for (int l = 1; l <= 7; l += 2)
            for (int m = -l; m <= l; ++m) {
                WeylReport rep = weyl_sum(D, {l, m}, one);
                worst_odd = std::max(worst_odd,
                                     std::abs(rep.sum) / std::max<u64>(rep.count, 1));
            }
    }
    ok = ok && worst_odd < 1e-9;
    {
        char t[64];
        std::snprintf(t, sizeof t, "odd-harmonic worst %.2e (tol 1e-9)", worst_odd);
        detail += t;
    }

    report("algebraic-suites", ok, detail);
}

} // namespace

int main()
{
    criterion_gauss();
    criterion_attached_form();
    criterion_heegner();
    criterion_coset();
    criterion_coefficients();
    criterion_scan();
    criterion_discrepancy_trend();
    criterion_algebra();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
