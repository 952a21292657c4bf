#include "linnik/classgrp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linnik {

std::vector<BQF> reduced_forms(i64 disc)
{
    if (disc >= 0 || ((disc % 4 + 4) % 4 != 0 && (disc % 4 + 4) % 4 != 1))
        throw std::invalid_argument("reduced_forms: disc must be negative, 0 or 1 mod 4");
    std::vector<BQF> out;
    const i64 amax = static_cast<i64>(isqrt(static_cast<u64>(-disc) / 3));
    for (i64 a = 1; a <= amax; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            i64 num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            BQF q{a, b, c};
            if (!q.is_reduced() || !q.primitive()) continue;
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BQF principal_form(i64 disc)
{
    if (((disc % 4) + 4) % 4 == 0) return {1, 0, -disc / 4};
    return {1, 1, (1 - disc) / 4};
}

BQF inverse_form(const BQF& q) { return reduce_form({q.a, -q.b, q.c}).first; }

namespace {

i64 eval(const BQF& q, i64 x, i64 y) { return q.a * x * x + q.b * x * y + q.c * y * y; }

// value of q at a primitive point, coprime to n, realized as the leading
// coefficient of an equivalent form
BQF represent_coprime(const BQF& q, i64 n)
{
    for (i64 bound = 1; bound < 64; ++bound) {
        for (i64 x = -bound; x <= bound; ++x) {
            for (i64 y = -bound; y <= bound; ++y) {
                if (std::max(std::abs(x), std::abs(y)) != bound && bound > 1) continue;
                if (gcd2(x, y) != 1) continue;
                i64 val = eval(q, x, y);
                if (val == 0 || gcd2(val, n) != 1) continue;
                auto [g, s, t] = ext_gcd(x, y);
                (void)g; // = 1
                // det [[x, -t],[y, s]] = x s + t y = 1
                UniWord u{{{x, -t}, {y, s}}};
                return transform(q, u);
            }
        }
    }
    throw std::logic_error("represent_coprime: no representation found");
}

} // namespace

BQF compose(const BQF& q1, const BQF& q2)
{
    if (q1.disc() != q2.disc())
        throw std::invalid_argument("compose: discriminants differ");
    if (!q1.primitive() || !q2.primitive())
        throw std::invalid_argument("compose: forms must be primitive");
    if (!q1.positive_definite() || !q2.positive_definite())
        throw std::invalid_argument("compose: forms must be positive definite");

    const i64 d = q1.disc();
    // replace q2 by an equivalent form whose leading coefficient is
    // coprime to a1, then translate to a concordant pair
    BQF g2 = gcd2(q1.a, q2.a) == 1 ? q2 : represent_coprime(q2, q1.a);
    const i64 a1 = q1.a, a2 = g2.a;
    // B = b1 (mod 2 a1), B = b2 (mod 2 a2); solvable since gcd(a1,a2)=1
    // and b1 = b2 = d (mod 2)
    auto [g, x, y] = ext_gcd(a1, a2);
    (void)y;
    if (g != 1) throw std::logic_error("compose: leading coefficients not coprime");
    i64 half_diff = (g2.b - q1.b) / 2;
    // k with a1 k = half_diff (mod a2)
    i64 k = i64(i128(x) * half_diff % a2);
    i128 B128 = i128(q1.b) + i128(2) * a1 * k;
    i128 mod = i128(2) * a1 * a2;
    B128 %= mod;
    if (B128 < 0) B128 += mod;
    i64 B = i64(B128);
    i64 a3 = a1 * a2;
    i128 c128 = (i128(B) * B - d) / (i128(4) * a3);
    BQF q3{a3, B, i64(c128)};
    return reduce_form(q3).first;
}

ClassGroup::ClassGroup(i64 disc)
    : disc_(disc), elements_(reduced_forms(disc))
{
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
    principal_ = index_of(principal_form(disc));
    table_.assign(elements_.size() * elements_.size(), elements_.size());
}

std::size_t ClassGroup::index_of(const BQF& reduced) const
{
    auto it = index_.find(reduced);
    if (it == index_.end()) throw std::invalid_argument("ClassGroup: form not in group");
    return it->second;
}

std::size_t ClassGroup::mul(std::size_t i, std::size_t j) const
{
    const std::size_t h = elements_.size();
    std::size_t& slot = table_[i * h + j];
    if (slot == h) slot = index_of(compose(elements_[i], elements_[j]));
    return slot;
}

std::size_t ClassGroup::inv(std::size_t i) const
{
    return index_of(inverse_form(elements_[i]));
}

std::vector<std::size_t> ClassGroup::squares_subgroup() const
{
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < elements_.size(); ++i) s.insert(mul(i, i));
    return {s.begin(), s.end()};
}

CosetReport coset_check(u64 D)
{
    if (D <= 3 || !is_admissible(D) || !is_squarefree(D))
        throw std::invalid_argument("coset_check: need squarefree admissible D > 3");
    const i64 disc = D % 4 == 3 ? -i64(D) : -4 * i64(D);
    ClassGroup g(disc);

    CosetReport rep;
    rep.D = D;
    rep.h = g.size();

    std::set<std::size_t> pd;
    for (const PrimVec3& v : enumerate_sphere(D))
        pd.insert(g.index_of(reduce_form(gram_form(v)).first));
    rep.pd_size = pd.size();

    auto sq = g.squares_subgroup();
    std::set<std::size_t> squares(sq.begin(), sq.end());
    rep.squares_size = squares.size();
    rep.genus_index = rep.h / rep.squares_size;

    rep.is_coset = rep.pd_size == rep.squares_size;
    if (rep.is_coset) {
        for (std::size_t a : pd) {
            for (std::size_t b : pd) {
                if (!squares.count(g.mul(a, g.inv(b)))) {
                    rep.is_coset = false;
                    break;
                }
            }
            if (!rep.is_coset) break;
        }
    }

    rep.r_field = factorize(static_cast<u64>(-disc)).distinct_primes();
    rep.genus_matches_r =
        rep.genus_index == (1ull << (rep.r_field - 1));
    return rep;
}

} // namespace linnik
