#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fence {

// Exact arbitrary-precision rational. The planar side of the construction is
// decided with these; no floating point enters a membership or order test.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_int(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp--) r *= base;
    return r;
}

inline Rational pow3_inv(unsigned exp) { return Rational(1, pow_int(3, exp)); }

// Fraction strings are always "num/den", including integers ("2/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a fraction: '" + s + "'");
    }
}

} // namespace fence
