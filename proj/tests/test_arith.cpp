#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "linnik/arith.hpp"

using namespace linnik;

TEST_CASE("ext_gcd against std::gcd on a dense grid")
{
    for (i64 a = -60; a <= 60; ++a) {
        for (i64 b = -60; b <= 60; ++b) {
            auto [g, x, y] = ext_gcd(a, b);
            CHECK(g == std::gcd(a, b));
            CHECK(a * x + b * y == g);
        }
    }
}

TEST_CASE("ext_gcd on large random pairs")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<i64> d(-1000000000000LL, 1000000000000LL);
    for (int i = 0; i < 10000; ++i) {
        i64 a = d(rng), b = d(rng);
        auto [g, x, y] = ext_gcd(a, b);
        CHECK(g == std::gcd(a, b));
        CHECK(a * x + b * y == g);
    }
}

TEST_CASE("isqrt exact on edges")
{
    for (u64 n = 0; n < 3000; ++n) {
        u64 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    for (u64 k = 1; k < 1000000; k *= 7) {
        CHECK(isqrt(k * k) == k);
        CHECK(isqrt(k * k - 1) == k - 1);
    }
    CHECK(isqrt(18446744065119617024ull) == 4294967294ull);
}

TEST_CASE("is_prime against trial division")
{
    auto slow = [](u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == slow(n));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551555ull));
}

TEST_CASE("factorize round trip and exponents")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> d(1, 1000000000000ull);
    for (int i = 0; i < 300; ++i) {
        u64 n = d(rng);
        Factorization f = factorize(n);
        u64 prod = 1;
        u64 last = 0;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            for (int j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
    }
    CHECK(factorize(1).factors.empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("squarefree against direct divisibility")
{
    for (u64 n = 1; n <= 2000; ++n) {
        bool sf = true;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) sf = false;
        CHECK(is_squarefree(n) == sf);
    }
}

TEST_CASE("jacobi equals Legendre symbol via Euler criterion for odd primes")
{
    for (u64 p = 3; p < 300; p += 2) {
        if (!is_prime(p)) continue;
        for (i64 a = -50; a <= 50; ++a) {
            i64 r = ((a % (i64)p) + (i64)p) % (i64)p;
            int leg;
            if (r == 0)
                leg = 0;
            else {
                u64 e = 1;
                u64 base = (u64)r, acc = 1;
                for (u64 k = 0; k < (p - 1) / 2; ++k) acc = acc * base % p;
                leg = acc == 1 ? 1 : -1;
                (void)e;
            }
            CHECK(jacobi(a, p) == leg);
        }
    }
}

TEST_CASE("jacobi is multiplicative in the denominator")
{
    for (u64 m = 3; m < 60; m += 2)
        for (u64 n = 3; n < 60; n += 2)
            for (i64 a = -20; a <= 20; ++a)
                CHECK(jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n));
    CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
}

TEST_CASE("admissibility matches the primitive three-squares criterion")
{
    // oracle: direct search for a primitive representation
    for (u64 D = 1; D <= 600; ++D) {
        bool found = false;
        i64 r = (i64)isqrt(D);
        for (i64 x = 0; x <= r && !found; ++x)
            for (i64 y = x; x * x + y * y <= (i64)D && !found; ++y) {
                i64 rem = (i64)D - x * x - y * y;
                i64 z = (i64)isqrt((u64)rem);
                if (z * z == rem && z >= y && std::gcd(std::gcd(x, y), z) == 1) found = true;
            }
        CHECK(is_admissible(D) == found);
    }
}

TEST_CASE("congruence filter")
{
    CongruenceFilter f;
    f.require_admissible = true;
    CHECK(passes_filter(5, f));
    CHECK_FALSE(passes_filter(7, f));
    CHECK_FALSE(passes_filter(8, f));

    // -2 = 1 = 1^2 mod 3, so 3 splits for D = 2
    CongruenceFilter g;
    g.split_primes = {3};
    CHECK(passes_filter(2, g));
    CHECK_FALSE(passes_filter(3, g));  // p | D
    CHECK_FALSE(passes_filter(1, g));  // -1 = 2 is not a square mod 3

    CongruenceFilter h;
    h.split_primes = {3, 5};
    h.require_squarefree = true;
    h.require_admissible = true;
    // -D must be a nonzero square mod 3 and mod 5
    for (u64 D = 1; D <= 300; ++D) {
        bool expect = is_admissible(D) && is_squarefree(D) && D % 3 != 0 && D % 5 != 0 &&
                      jacobi(-(i64)(D % 3), 3) == 1 && jacobi(-(i64)(D % 5), 5) == 1;
        CHECK(passes_filter(D, h) == expect);
    }
}
