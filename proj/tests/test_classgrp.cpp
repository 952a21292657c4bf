#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linnik/classgrp.hpp"

using namespace linnik;

TEST_CASE("reduced form lists against known class numbers")
{
    // h(d) for small fundamental-type discriminants, classical tables
    struct Row { i64 d; u64 h; };
    const Row rows[] = {
        {-3, 1},  {-4, 1},  {-7, 1},   {-8, 1},   {-11, 1}, {-15, 2}, {-20, 2},
        {-23, 3}, {-24, 2}, {-31, 3},  {-35, 2},  {-39, 4}, {-40, 2}, {-47, 5},
        {-56, 4}, {-71, 7}, {-84, 4},  {-95, 8},  {-103, 5}, {-104, 6}, {-120, 4},
        {-163, 1}, {-227, 5}, {-231, 12}, {-312, 4}, {-407, 16}, {-420, 8},
    };
    for (auto [d, h] : rows) {
        INFO("disc ", d);
        CHECK(reduced_forms(d).size() == h);
    }
    CHECK_THROWS_AS(reduced_forms(-5), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms(5), std::invalid_argument);
}

TEST_CASE("composition: identity, inverses, commutativity, associativity")
{
    std::mt19937_64 rng(11);
    for (i64 d = -3; d >= -1200; --d) {
        if (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1) continue;
        ClassGroup g(d);
        const std::size_t h = g.size();
        REQUIRE(h >= 1);
        for (std::size_t i = 0; i < h; ++i) {
            CHECK(g.mul(g.principal(), i) == i);
            CHECK(g.mul(i, g.inv(i)) == g.principal());
            for (std::size_t j = 0; j < h; ++j)
                CHECK(g.mul(i, j) == g.mul(j, i));
        }
        std::uniform_int_distribution<std::size_t> pick(0, h - 1);
        for (int t = 0; t < 30; ++t) {
            std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("composition is well defined on classes")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<i64> entry(-4, 4);
    for (i64 d : {-20, -23, -56, -71, -84, -120, -231}) {
        ClassGroup g(d);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (int t = 0; t < 200; ++t) {
            BQF q1 = g.elements()[pick(rng)];
            BQF q2 = g.elements()[pick(rng)];
            BQF ref = compose(q1, q2);
            // replace the inputs by random equivalents
            i64 p, q, r, s;
            do {
                p = entry(rng), q = entry(rng), r = entry(rng), s = entry(rng);
            } while (p * s - q * r != 1);
            UniWord u{{{p, q}, {r, s}}};
            CHECK(compose(transform(q1, u), q2) == ref);
            CHECK(compose(q1, transform(q2, u)) == ref);
        }
    }
}

TEST_CASE("squares subgroup and genus index")
{
    // d = -20: h = 2, C^2 trivial, genus index 2
    ClassGroup g20(-20);
    CHECK(g20.squares_subgroup().size() == 1);
    // d = -23: h = 3 odd, squaring is a bijection
    ClassGroup g23(-23);
    CHECK(g23.squares_subgroup().size() == 3);
    // d = -84: h = 4, elementary 2-group, C^2 trivial
    ClassGroup g84(-84);
    CHECK(g84.squares_subgroup().size() == 1);
}

TEST_CASE("shape classes form a coset of the squares")
{
    for (u64 D = 5; D <= 400; ++D) {
        if (D <= 3 || !is_admissible(D) || !is_squarefree(D)) continue;
        CosetReport rep = coset_check(D);
        INFO("D = ", D, " h = ", rep.h, " |P| = ", rep.pd_size);
        CHECK(rep.is_coset);
        CHECK(rep.pd_size == rep.squares_size);
        CHECK(rep.h % rep.squares_size == 0);
        CHECK(rep.genus_matches_r);
    }
}

TEST_CASE("genus index uses the field discriminant prime count")
{
    // D = 5: disc -20, ramified primes {2, 5}, genus index 2 although
    // D itself is prime
    CosetReport rep = coset_check(5);
    CHECK(rep.r_field == 2);
    CHECK(rep.genus_index == 2);

    // D = 3 mod 4 squarefree: disc -D is fundamental, r = omega(D)
    CosetReport rep35 = coset_check(35);
    CHECK(rep35.r_field == 2);
    CHECK(rep35.genus_matches_r);
}
