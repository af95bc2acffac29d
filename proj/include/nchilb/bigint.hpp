#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nchilb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Falling factorial e(e-1)...(e-i+1); equals the i-th derivative of q^e at q=1.
inline BigInt fallingFactorial(std::int64_t e, int i) {
    BigInt r = 1;
    for (int j = 0; j < i; ++j) r *= e - j;
    return r;
}

/// Double conversion that survives values far beyond the double range
/// by splitting off a power of two first.
inline double toDouble(const BigInt& x) {
    if (x == 0) return 0.0;
    const BigInt ax = abs(x);
    const std::int64_t bits = static_cast<std::int64_t>(msb(ax)) + 1;
    if (bits <= 992) {
        return x.convert_to<double>();
    }
    const BigInt top = ax >> static_cast<unsigned>(bits - 64);
    double v = std::ldexp(top.convert_to<double>(), static_cast<int>(bits - 64));
    return x < 0 ? -v : v;
}

inline double toDouble(const BigRational& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    if (num == 0) return 0.0;
    const std::int64_t nb = static_cast<std::int64_t>(msb(abs(num)));
    const std::int64_t db = static_cast<std::int64_t>(msb(den));
    if (nb < 500 && db < 500) return x.convert_to<double>();
    // Scale both operands into a safe window, track the exponent difference.
    auto scaled = [](const BigInt& v, std::int64_t b) {
        return toDouble(b > 64 ? BigInt(v >> static_cast<unsigned>(b - 64)) : v);
    };
    const double mn = scaled(abs(num), nb);
    const double md = scaled(den, db);
    const std::int64_t en = nb > 64 ? nb - 64 : 0;
    const std::int64_t ed = db > 64 ? db - 64 : 0;
    double v = std::ldexp(mn / md, static_cast<int>(en - ed));
    return num < 0 ? -v : v;
}

/// Exact integral power of a rational.
inline BigRational rationalPow(const BigRational& base, std::uint64_t e) {
    BigRational r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

} // namespace nchilb
