#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linnik/modsurf.hpp"

using namespace linnik;

TEST_CASE("basis invariants for every point up to D = 300")
{
    for (u64 D = 1; D <= 300; ++D) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            OrthoBasis b = ortho_basis(v);
            CHECK(dot(b.v1, v.vec()) == 0);
            CHECK(dot(b.v2, v.vec()) == 0);
            CHECK(dot(b.w, v.vec()) == 1);
            CHECK(det3(b.v1, b.v2, b.w) == 1);
            CHECK(det3(b.v1, b.v2, v.vec()) == (i64)D);
        }
    }
}

TEST_CASE("gram form discriminant and primitivity")
{
    for (u64 D = 1; D <= 400; ++D) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            BQF raw = raw_gram(v);
            CHECK(raw.disc() == -4 * (i64)D);
            CHECK(raw.positive_definite());
            BQF q = gram_form(v);
            CHECK(q.disc() == (D % 4 == 3 ? -(i64)D : -4 * (i64)D));
            CHECK(q.primitive());
        }
    }
}

TEST_CASE("cross equation solver on random right-hand sides")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<i64> coef(-1000, 1000);
    std::uniform_int_distribution<int> didx(0, 12);
    const u64 Ds[] = {1, 2, 5, 14, 101, 206, 1001, 2094, 5003, 770, 398, 3, 6};
    int done = 0;
    while (done < 10000) {
        u64 D = Ds[didx(rng)];
        auto pts = enumerate_sphere(D);
        std::uniform_int_distribution<std::size_t> pidx(0, pts.size() - 1);
        const PrimVec3& v = pts[pidx(rng)];
        OrthoBasis b = ortho_basis(v);
        // random lattice vector of v-perp
        Vec3 w = coef(rng) * b.v1 + coef(rng) * b.v2;
        Vec3 u = solve_cross(v, w); // verifies cross(v,u) == w internally
        CHECK(cross(v.vec(), u) == w);
        ++done;
    }
    // rejects non-orthogonal targets
    CHECK_THROWS_AS(solve_cross(PrimVec3{1, 2, 3, 14}, Vec3{1, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("grid point is independent of the basis and completion choices")
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<i64> small(-3, 3);
    for (u64 D : {5u, 11u, 14u, 21u, 30u, 101u, 203u, 206u}) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            OrthoBasis b = ortho_basis(v);
            GridPoint ref = grid_point(b);
            for (int trial = 0; trial < 8; ++trial) {
                // random SL2 change of basis and shifted completion
                i64 p, q, r, s;
                do {
                    p = small(rng), q = small(rng), r = small(rng), s = small(rng);
                } while (p * s - q * r != 1);
                OrthoBasis c;
                c.v = v;
                c.v1 = p * b.v1 + r * b.v2;
                c.v2 = q * b.v1 + s * b.v2;
                c.w = b.w + small(rng) * b.v1 + small(rng) * b.v2;
                REQUIRE(det3(c.v1, c.v2, c.w) == 1);
                REQUIRE(dot(c.w, v.vec()) == 1);
                CHECK(grid_point(c) == ref);
            }
        }
    }
}

TEST_CASE("antipodal points carry mirror shapes")
{
    for (u64 D : {14u, 21u, 101u, 203u}) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            PrimVec3 nv{-v.x, -v.y, -v.z, D};
            BQF s = grid_point(v).shape;
            // reduction commutes with the halving scale, so this works
            // for both discriminant branches
            CHECK(grid_point(nv).shape == reduce_form({s.a, -s.b, s.c}).first);
        }
    }
}

TEST_CASE("projection gram reduces to the lattice gram")
{
    for (u64 D = 1; D <= 300; ++D) {
        for (const PrimVec3& v : enumerate_sphere(D)) {
            BQF proj = projection_form(v);
            CHECK(proj.disc() == -4 * (i64)D);
            CHECK(reduce_form(proj).first == reduce_form(raw_gram(v)).first);
        }
    }
}
