#pragma once

#include "nchilb/bigint.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/forest.hpp"
#include "nchilb/qpolynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nchilb {

/// Dimension of the ambient variety: N = nd + (m-1)d^2.
inline std::uint64_t ambientDimension(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    if (m < 1 || n < 1) throw std::invalid_argument("ambientDimension: need m >= 1, n >= 1");
    return n * d + (m - 1) * d * d;
}

/// Closed formula for the Euler characteristic (the Fuss-Catalan count).
inline BigInt eulerClosedForm(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    return forestCount(m, n, d);
}

struct BettiTable {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    std::uint64_t d = 0;
    std::vector<BigInt> betti;    // b_0 .. b_{2N}
    QPolynomial intersectionPoly; // sum over forests of q^{d(F)}

    BigInt total() const {
        BigInt s = 0;
        for (const BigInt& b : betti) s += b;
        return s;
    }
};

/// b_{2j} counts the cells of codimension j: forests with N - d(F) = j.
inline BettiTable bettiNumbers(std::uint32_t m, std::uint32_t n, std::uint64_t d,
                               std::uint64_t maxCount = 10'000'000) {
    const BigInt predicted = forestCount(m, n, d);
    if (predicted > maxCount)
        throw CapExceeded("bettiNumbers: forest count " + predicted.str() + " exceeds cap " +
                          std::to_string(maxCount));
    const std::uint64_t bigN = ambientDimension(m, n, d);
    BettiTable t;
    t.m = m;
    t.n = n;
    t.d = d;
    t.betti.assign(2 * bigN + 1, 0);
    std::vector<BigInt> dimHist(bigN + 1, 0);
    forEachForest(m, n, d, [&](const Forest& f) { ++dimHist[dStat(f)]; });
    for (std::uint64_t dim = 0; dim <= bigN; ++dim) {
        if (dimHist[dim] == 0) continue;
        t.betti[2 * (bigN - dim)] = dimHist[dim];
    }
    t.intersectionPoly = QPolynomial(std::vector<BigInt>(dimHist.begin(), dimHist.end()));
    return t;
}

/// Predicted number of F_q-points: sum over forests of q^{d(F)}.
inline BigInt predictedPointCount(std::uint32_t m, std::uint32_t n, std::uint64_t d,
                                  const BigInt& q, std::uint64_t maxCount = 10'000'000) {
    if (q < 2) throw std::invalid_argument("predictedPointCount: need q >= 2");
    return bettiNumbers(m, n, d, maxCount).intersectionPoly.evaluate(q);
}

} // namespace nchilb
