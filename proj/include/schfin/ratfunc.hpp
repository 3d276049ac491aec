#pragma once

#include "schfin/polynomial.hpp"
#include "schfin/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schfin {

// Dense univariate polynomial over Q; coefficient i belongs to t^i, trailing
// zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly t(int power = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int order() const; // lowest nonzero power; -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational at(int i) const;
    Rational leading() const;

    UniPoly operator+(const UniPoly& g) const;
    UniPoly operator-(const UniPoly& g) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& g) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& g) const = default;

    // Euclidean division: returns (quotient, remainder) with deg r < deg g.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
    static UniPoly gcd(UniPoly a, UniPoly b); // monic

    Rational evaluate(const Rational& x) const;
    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// Element of Q(t) in canonical form: monic denominator, gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPoly::constant(1)) {}
    RationalFunction(UniPoly num, UniPoly den); // throws on zero denominator
    static RationalFunction constant(const Rational& c);
    static RationalFunction t();

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& g) const;
    RationalFunction operator-(const RationalFunction& g) const;
    RationalFunction operator*(const RationalFunction& g) const;
    RationalFunction inverse() const; // throws on zero
    RationalFunction pow(int e) const;
    bool operator==(const RationalFunction& g) const = default;

    // ord_t(num) - ord_t(den); nullopt encodes +infinity (the zero function).
    std::optional<int> valuation() const;

    // Value at t = 0; requires valuation >= 0.
    Rational value_at_zero() const;

    std::string to_string() const;

private:
    UniPoly num_, den_;
    void normalize();
};

// Evaluates a multivariate polynomial at rational-function arguments.
RationalFunction evaluate(const Polynomial& f, std::span<const RationalFunction> images);

} // namespace schfin
