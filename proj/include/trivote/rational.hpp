#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace trivote {

/// Exact rational score type; tie detection in the rules must never go
/// through floating point.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

/// H(p) = sum_{j=1..p} 1/j, H(0) = 0.
inline Rational harmonic(int p) {
    Rational h = 0;
    for (int j = 1; j <= p; ++j) h += Rational(1, j);
    return h;
}

}  // namespace trivote
