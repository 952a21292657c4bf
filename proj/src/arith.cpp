#include "linnik/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace linnik {

ExtGcd ext_gcd(i64 a, i64 b)
{
    // iterative extended Euclid on absolute values, signs restored at the end
    i64 old_r = a < 0 ? -a : a, r = b < 0 ? -b : b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    i64 x = a < 0 ? -old_s : old_s;
    i64 y = b < 0 ? -old_t : old_t;
    return {old_r, x, y};
}

i64 gcd2(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

u64 isqrt(u64 n)
{
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n)
{
    // Brent's cycle variant; n is odd composite with no factor < 1e6
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = f(y);
            int k = 0;
            while (k < lam && d == 1) {
                int span = std::min(128, lam - k);
                u64 ys = y;
                for (int i = 0; i < span; ++i) {
                    y = f(y);
                    u64 diff = x > y ? x - y : y - x;
                    if (diff) q = mulmod(q, diff, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    for (int i = 0; i < span; ++i) {
                        y = f(y);
                        u64 diff = x > y ? x - y : y - x;
                        d = std::gcd(diff ? diff : n, n);
                        if (d != 1) break;
                    }
                    break;
                }
                k += span;
            }
            lam *= 2;
        }
        if (d != n && d != 1) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& primes)
{
    if (n == 1) return;
    if (is_prime(n)) { primes.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

Factorization factorize(u64 n)
{
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::vector<u64> primes;
    for (u64 p = 2; p <= 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

bool Factorization::squarefree() const
{
    for (auto& [p, e] : factors)
        if (e > 1) return false;
    return true;
}

int Factorization::distinct_primes() const { return static_cast<int>(factors.size()); }

bool is_squarefree(u64 n) { return factorize(n).squarefree(); }

int jacobi(i64 a, u64 n)
{
    if (n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd");
    a %= static_cast<i64>(n);
    if (a < 0) a += static_cast<i64>(n);
    u64 ua = static_cast<u64>(a);
    int t = 1;
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            u64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(ua, n);
        if (ua % 4 == 3 && n % 4 == 3) t = -t;
        ua %= n;
    }
    return n == 1 ? t : 0;
}

bool is_admissible(u64 D)
{
    u64 r = D % 8;
    return r != 0 && r != 4 && r != 7;
}

bool passes_filter(u64 D, const CongruenceFilter& f)
{
    if (f.require_admissible && !is_admissible(D)) return false;
    for (u64 p : f.split_primes) {
        if (D % p == 0) return false;
        if (jacobi(-static_cast<i64>(D % p), p) != 1) return false;
    }
    if (f.require_squarefree && !is_squarefree(D)) return false;
    return true;
}

} // namespace linnik
