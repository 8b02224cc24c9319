#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace castelnuovo {

// All geometry is done in exact integer arithmetic; rationals appear only in
// interpolation cross-checks. Both types are canonical by construction
// (cpp_rational keeps lowest terms with a positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace castelnuovo
