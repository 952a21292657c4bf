#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace linnik {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;
using u128 = unsigned __int128;

struct ExtGcd {
    i64 g; // gcd(a,b) >= 0
    i64 x;
    i64 y; // a*x + b*y = g
};

// Bezout coefficients; gcd(0,0) = 0 by convention.
ExtGcd ext_gcd(i64 a, i64 b);

i64 gcd2(i64 a, i64 b);
i64 gcd3(i64 a, i64 b, i64 c);

// floor(sqrt(n)), exact.
u64 isqrt(u64 n);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime(u64 n);

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors; // primes strictly increasing

    bool squarefree() const;
    int distinct_primes() const; // r(n)
};

// Trial division up to 1e6, then Pollard rho. Rejects n = 0.
Factorization factorize(u64 n);

bool is_squarefree(u64 n);

// Jacobi symbol (a|n) for odd n >= 1. Rejects even n.
int jacobi(i64 a, u64 n);

// D mod 8 not in {0,4,7}; exactly the D represented by a primitive
// sum of three squares.
bool is_admissible(u64 D);

struct CongruenceFilter {
    bool require_admissible = false;
    std::vector<u64> split_primes; // distinct odd primes
    bool require_squarefree = false;
};

// true iff D satisfies every enabled condition: admissibility, and for
// each split prime p: p does not divide D and -D is a nonzero square
// mod p, and squarefreeness.
bool passes_filter(u64 D, const CongruenceFilter& f);

} // namespace linnik
