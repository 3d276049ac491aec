#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace schfin {

// Exact coefficient arithmetic. cpp_rational keeps gcd(num, den) = 1 and den > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Height of p/q is max(|p|, q); used for pivot selection in exact elimination.
inline BigInt rat_height(const Rational& r) {
    BigInt n = boost::multiprecision::abs(rat_numerator(r));
    BigInt d = rat_denominator(r);
    return n > d ? n : d;
}

inline std::string rat_to_string(const Rational& r) {
    if (rat_denominator(r) == 1) return rat_numerator(r).str();
    return rat_numerator(r).str() + "/" + rat_denominator(r).str();
}

} // namespace schfin
