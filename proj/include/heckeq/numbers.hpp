// Exact integer helpers: big integers, factorials, Fibonacci and Lucas numbers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heckeq {

using BigInt = boost::multiprecision::cpp_int;

// F_0 = 0, F_1 = 1.
inline BigInt fibonacci(int n) {
    if (n < 0) return 0;
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// L_n = F_{n+1} + F_{n-1}.
inline BigInt lucas(int n) { return fibonacci(n + 1) + fibonacci(n - 1); }

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace heckeq
