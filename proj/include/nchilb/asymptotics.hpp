#pragma once

#include "nchilb/betti.hpp"
#include "nchilb/bigint.hpp"
#include "nchilb/zeta.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nchilb {

/// Exponential growth base of the Euler characteristic: m^m / (m-1)^{m-1}.
inline BigRational growthBase(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("growthBase: polynomial regime at m = 1");
    return BigRational(pow(BigInt(m), m), pow(BigInt(m - 1), m - 1));
}

/// Leading constant A(m,n) = n m^{n-1/2} / (sqrt(2 pi) (m-1)^{n+1/2}).
inline double asymptoticConstant(std::uint32_t m, std::uint32_t n) {
    return n * std::pow(m, n - 0.5) / (std::sqrt(2.0 * M_PI) * std::pow(m - 1.0, n + 0.5));
}

/// First-order Stirling estimate A(m,n) d^{-3/2} (m^m/(m-1)^{m-1})^d.
/// Overflows to +inf once the true value leaves the double range.
inline double asymptoticChi(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    if (m < 2) throw std::invalid_argument("asymptoticChi: polynomial regime at m = 1");
    if (d < 1) throw std::invalid_argument("asymptoticChi: need d >= 1");
    const double logv = std::log(asymptoticConstant(m, n)) - 1.5 * std::log(double(d)) +
                        double(d) * std::log(toDouble(growthBase(m)));
    return std::exp(logv);
}

/// chi / asymptoticChi computed without overflow: the exact rational
/// chi * growthBase^{-d} is small, the rest is floating point.
inline double eulerAsymptoticRatio(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    if (m < 2) throw std::invalid_argument("eulerAsymptoticRatio: polynomial regime at m = 1");
    if (d < 1) throw std::invalid_argument("eulerAsymptoticRatio: need d >= 1");
    const BigRational damped =
        BigRational(eulerClosedForm(m, n, d)) / rationalPow(growthBase(m), d);
    return toDouble(damped) * std::pow(double(d), 1.5) / asymptoticConstant(m, n);
}

/// Airy moments: the Omega recursion plus E(X^k) = 2 sqrt(pi) Omega_k /
/// Gamma((3k-1)/2). Half-integer Gamma values are kept as an exact rational
/// times an optional sqrt(pi).
struct AiryMoments {
    struct Moment {
        BigRational rationalPart; // E(X^k) = rationalPart * (sqrt(pi) if timesSqrtPi)
        bool timesSqrtPi = false;
        double value = 0.0;
    };
    std::vector<BigRational> omegas; // Omega_0 .. Omega_K
    std::vector<Moment> moments;     // index k = 1..K at [k]; [0] is the constant 1
};

inline AiryMoments airyMoments(int K) {
    if (K < 1) throw std::invalid_argument("airyMoments: need K >= 1");
    AiryMoments a;
    a.omegas.resize(static_cast<std::size_t>(K) + 1);
    a.omegas[0] = -1;
    for (int k = 1; k <= K; ++k) {
        BigRational s = BigRational((3 * k - 4) * k) * a.omegas[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i < k; ++i)
            s += BigRational(binomial(k, i)) * a.omegas[static_cast<std::size_t>(i)] *
                 a.omegas[static_cast<std::size_t>(k - i)];
        a.omegas[static_cast<std::size_t>(k)] = s / 2;
    }
    a.moments.resize(static_cast<std::size_t>(K) + 1);
    a.moments[0] = {BigRational(1), false, 1.0};
    const double sqrtPi = std::sqrt(M_PI);
    for (int k = 1; k <= K; ++k) {
        AiryMoments::Moment mom;
        const int twoZ = 3 * k - 1; // Gamma(twoZ / 2)
        if (twoZ % 2 == 0) {
            // integer argument: Gamma(z) = (z-1)!, moment carries sqrt(pi)
            const int z = twoZ / 2;
            BigInt fact = 1;
            for (int i = 2; i < z; ++i) fact *= i;
            mom.rationalPart = 2 * a.omegas[static_cast<std::size_t>(k)] / BigRational(fact);
            mom.timesSqrtPi = true;
        } else {
            // Gamma(j + 1/2) = (2j)! / (4^j j!) sqrt(pi); the sqrt(pi) cancels
            const int j = (twoZ - 1) / 2;
            BigInt num = 1, den = 1;
            for (int i = 1; i <= 2 * j; ++i) num *= i;
            for (int i = 1; i <= j; ++i) den *= i;
            const BigRational gammaRat(num, den * pow(BigInt(4), j));
            mom.rationalPart = 2 * a.omegas[static_cast<std::size_t>(k)] / gammaRat;
            mom.timesSqrtPi = false;
        }
        mom.value = toDouble(mom.rationalPart) * (mom.timesSqrtPi ? sqrtPi : 1.0);
        a.moments[static_cast<std::size_t>(k)] = mom;
    }
    return a;
}

/// Per-degree record of the exact and normalized moments of X_d against the
/// Airy targets, with c_d = sqrt(8/(m(m-1))) d^{-3/2}.
struct LimitLawTrace {
    std::uint32_t m = 2;
    int jmax = 2;
    struct Entry {
        std::uint64_t d = 0;
        std::vector<BigRational> exact;    // E[X_d^j], j = 0..jmax
        std::vector<double> normalized;    // c_d^j E[X_d^j]
        std::vector<double> airyTarget;    // E(X^j)
        std::vector<double> gap;           // normalized - target
    };
    std::vector<Entry> entries;
};

inline LimitLawTrace limitLawCheck(std::uint32_t m, const std::vector<std::uint64_t>& dlist,
                                   int jmax = 2) {
    if (m < 2) throw std::invalid_argument("limitLawCheck: need m >= 2");
    if (dlist.empty()) throw std::invalid_argument("limitLawCheck: empty d list");
    for (std::size_t i = 1; i < dlist.size(); ++i)
        if (dlist[i] <= dlist[i - 1])
            throw std::invalid_argument("limitLawCheck: d list must be increasing");
    const int dmax = static_cast<int>(dlist.back());
    const MomentTable table = momentSums(m, dmax, jmax);
    const AiryMoments airy = airyMoments(jmax >= 1 ? jmax : 1);
    LimitLawTrace trace;
    trace.m = m;
    trace.jmax = jmax;
    for (std::uint64_t d : dlist) {
        LimitLawTrace::Entry e;
        e.d = d;
        const double cd = std::sqrt(8.0 / (double(m) * (m - 1.0))) * std::pow(double(d), -1.5);
        for (int j = 0; j <= jmax; ++j) {
            const BigRational exact(table.at(static_cast<int>(d), j), table.at(static_cast<int>(d), 0));
            e.exact.push_back(exact);
            const double normalized = toDouble(exact) * std::pow(cd, j);
            e.normalized.push_back(normalized);
            const double target = j == 0 ? 1.0 : airy.moments[static_cast<std::size_t>(j)].value;
            e.airyTarget.push_back(target);
            e.gap.push_back(normalized - target);
        }
        trace.entries.push_back(std::move(e));
    }
    return trace;
}

} // namespace nchilb
