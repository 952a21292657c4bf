#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "linnik/modsurf.hpp"

namespace linnik {

// All primitive reduced forms of the given discriminant (disc < 0,
// disc = 0 or 1 mod 4). Rejects other discriminants.
std::vector<BQF> reduced_forms(i64 disc);

// (1, 0, |d|/4) or (1, 1, (1+|d|)/4)
BQF principal_form(i64 disc);

// Reduced representative of the inverse class.
BQF inverse_form(const BQF& q);

// Gauss composition via concordant forms; both inputs primitive with
// the same negative discriminant. Returns the reduced representative.
BQF compose(const BQF& q1, const BQF& q2);

class ClassGroup {
public:
    explicit ClassGroup(i64 disc);

    i64 disc() const { return disc_; }
    const std::vector<BQF>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t principal() const { return principal_; }

    std::size_t index_of(const BQF& reduced) const; // throws if absent
    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const;

    std::vector<std::size_t> squares_subgroup() const;

private:
    i64 disc_;
    std::vector<BQF> elements_;
    std::size_t principal_;
    std::map<BQF, std::size_t> index_;
    mutable std::vector<std::size_t> table_; // lazily filled h x h table
};

struct CosetReport {
    u64 D = 0;
    u64 h = 0;
    u64 squares_size = 0;
    u64 genus_index = 0; // h / |C^2|
    u64 pd_size = 0;     // |P_D|
    bool is_coset = false;
    // genus index vs 2^(r-1): r_field counts the primes dividing the
    // field discriminant (resolves the r-convention empirically)
    int r_field = 0;
    bool genus_matches_r = false;
};

// Claim check: the set P_D = {[q_v] : v in S^2(D)} is a coset of the
// squares subgroup. Requires D squarefree, admissible, D > 3.
CosetReport coset_check(u64 D);

} // namespace linnik
