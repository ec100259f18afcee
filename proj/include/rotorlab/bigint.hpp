#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <vector>

namespace rotorlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Ceiling of a/b for b > 0.  cpp_int division truncates toward zero.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b > 0) {
        ++q;
    }
    return q;
}

// Floor of a/b for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b < 0) {
        --q;
    }
    return q;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt vector_gcd(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) {
        g = big_gcd(g, x);
    }
    return g;
}

}  // namespace rotorlab
