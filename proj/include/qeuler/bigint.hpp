#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qeuler {

// All coefficient arithmetic is exact; intermediate convolutions overflow
// 64 bits well before n = 10.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;  // exact at every step
    }
    return out;
}

inline BigInt int_pow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt out = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

}  // namespace qeuler
