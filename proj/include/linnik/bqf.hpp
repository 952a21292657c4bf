#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "linnik/arith.hpp"

namespace linnik {

// A computation contradicted one of the verified claims. Never silently
// patched: the whole point is to surface such events.
struct ClaimViolation : std::runtime_error {
    explicit ClaimViolation(const std::string& what) : std::runtime_error(what) {}
};

// integral binary quadratic form a X^2 + b XY + c Y^2
struct BQF {
    i64 a = 0, b = 0, c = 0;

    i64 disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    bool primitive() const { return gcd3(a, b, c) == 1; }

    // |b| <= a <= c with b >= 0 on the boundary |b| = a or a = c
    bool is_reduced() const
    {
        i64 ab = b < 0 ? -b : b;
        if (!(ab <= a && a <= c)) return false;
        if ((ab == a || a == c) && b < 0) return false;
        return true;
    }

    friend bool operator==(const BQF&, const BQF&) = default;
    friend auto operator<=>(const BQF&, const BQF&) = default;
};

} // namespace linnik
