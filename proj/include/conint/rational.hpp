#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <complex>
#include <stdexcept>

namespace conint {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator (boost::rational invariant).
using Rational = boost::rational<BigInt>;

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step: product of i+1 consecutive integers
    }
    return r;
}

inline BigInt ipow(BigInt base, long e) {
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rpow(const Rational& base, long e) {
    if (e >= 0) return Rational(ipow(base.numerator(), e), ipow(base.denominator(), e));
    if (base.numerator() == 0) throw std::domain_error("rpow: zero to negative power");
    return Rational(ipow(base.denominator(), -e), ipow(base.numerator(), -e));
}

inline double to_double(const Rational& q) {
    // exact for the magnitudes used here; falls back to long-division scaling
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

// value * i^phase as an exact carrier for (2i)^k style prefactors
inline std::complex<double> unit_phase(long ipower) {
    switch (((ipower % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace conint
