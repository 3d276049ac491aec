#pragma once

#include "schfin/polynomial.hpp"

#include <vector>

namespace schfin {

// Finitely many generators in a fixed ambient. Zero generators are dropped on
// construction; an empty list is the zero ideal.
struct Ideal {
    int nvars = 0;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(int n, std::vector<Polynomial> g);
};

// Remainder of multivariate division of f by G; no term of the result is
// divisible by a leading term of G. Divisors are tried in list order, so the
// output is deterministic.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord);

// Reduced Groebner basis: monic, autoreduced, sorted ascending by leading
// monomial. Pair selection is the normal strategy (minimal lcm degree, then
// lex on indices); both Buchberger pruning criteria are applied.
std::vector<Polynomial> buchberger(const Ideal& ideal, const TermOrder& ord);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_membership(const Polynomial& f, std::span<const Polynomial> groebner, const TermOrder& ord);

// f in sqrt(I), decided by adjoining a fresh variable y and testing
// 1 in I + (1 - y*f).
bool radical_membership(const Polynomial& f, const Ideal& ideal);

// Generators of I intersected with Q[keep], via a block order that puts the
// complement of `keep` in the dominant block. Output lives in the same
// ambient; every generator is supported on `keep`.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<bool>& keep);

// True when the reduced basis is {1}.
bool is_unit_ideal(std::span<const Polynomial> reduced_groebner);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

} // namespace schfin
