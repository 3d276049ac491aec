#pragma once

#include "schfin/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace schfin {

// Exponent vector over a fixed ambient variable list. The ambient is implicit:
// all monomials of one computation share the same width.
struct Monomial {
    std::vector<int> exps;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const; // pre: other.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const = default;
};

// degrevlex comparison used as the canonical total order on monomials.
// Returns <0, 0, >0 like a three-way compare, with a "larger" meaning later.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

// Monomial well-orders compatible with multiplication. The block order puts
// the flagged variables in a dominant degrevlex block (used for elimination).
class TermOrder {
public:
    static TermOrder degrevlex() { return TermOrder(Kind::Degrevlex, {}); }
    static TermOrder lex() { return TermOrder(Kind::Lex, {}); }
    static TermOrder block(std::vector<bool> dominant) {
        return TermOrder(Kind::Block, std::move(dominant));
    }

    // strict: a comes before b (a is smaller)
    bool less(const Monomial& a, const Monomial& b) const;
    int cmp(const Monomial& a, const Monomial& b) const;

private:
    enum class Kind { Degrevlex, Lex, Block };
    TermOrder(Kind k, std::vector<bool> dom) : kind_(k), dominant_(std::move(dom)) {}
    Kind kind_;
    std::vector<bool> dominant_;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending
// under the canonical degrevlex order, with no zero coefficients and no
// duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, std::vector<Term> terms); // normalizes

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, int power = 1);
    static Polynomial from_term(Monomial m, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    int total_degree() const; // -1 for zero

    const Term& leading_term(const TermOrder& ord) const; // pre: nonzero
    Rational constant_value() const;                      // coefficient of 1

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // True when every term with a nonzero exponent sits inside `allowed`.
    bool supported_on(const std::vector<bool>& allowed) const;

    // Widens/permutes the ambient: new_index[i] is the slot of old variable i
    // in the new ambient of width new_nvars.
    Polynomial remap(int new_nvars, std::span<const int> new_index) const;

    std::string to_string(std::span<const std::string> vars) const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
    void normalize();
};

// Substitutes images[i] for variable i. All images share one target ambient.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, int target_nvars);

} // namespace schfin
