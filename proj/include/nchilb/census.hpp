#pragma once

#include "nchilb/betti.hpp"
#include "nchilb/bigint.hpp"
#include "nchilb/cells.hpp"
#include "nchilb/errors.hpp"
#include "nchilb/fields.hpp"
#include "nchilb/forest_text.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nchilb {

/// |GL_d(F_p)| = prod_{i=0}^{d-1} (p^d - p^i).
inline BigInt glOrder(std::uint32_t d, std::uint64_t p) {
    BigInt order = 1;
    const BigInt pd = pow(BigInt(p), d);
    BigInt pi = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        order *= pd - pi;
        pi *= p;
    }
    return order;
}

struct CensusReport {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    std::uint32_t d = 0;
    std::uint64_t p = 2;
    BigInt stableTupleCount = 0;
    BigInt glOrderValue = 1;
    BigInt pointCount = 0;
    bool withPerCell = false;
    std::map<std::string, BigInt> perCell; // canonical forest text -> orbit count
};

namespace detail {

/// Exhaustive walk over Hom(V,W) + End(W)^m with the f-block outermost, so
/// the all-zero f prefix (never stable for d >= 1) is skipped wholesale.
template <class Visit>
void forEachTuple(std::uint32_t m, std::uint32_t n, std::uint32_t d, const PrimeField& field,
                  Visit visit) {
    const std::uint64_t p = field.characteristic();
    const std::size_t fEntries = static_cast<std::size_t>(n) * d;
    const std::size_t phiEntries = static_cast<std::size_t>(m) * d * d;
    CellPoint<PrimeField> pt{m, n, d, field, Matrix<PrimeField>(d, n, 0),
                             std::vector<Matrix<PrimeField>>(m, Matrix<PrimeField>(d, d, 0))};
    std::vector<std::uint64_t> fDigits(fEntries, 0), phiDigits(phiEntries, 0);
    auto bump = [p](std::vector<std::uint64_t>& digits) {
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < p) return true;
            digits[i] = 0;
        }
        return false;
    };
    bool fZero = true;
    do {
        if (fZero) { // first f iterate is all zeros; skip its phi loop entirely
            fZero = false;
            continue;
        }
        for (std::size_t i = 0; i < fEntries; ++i)
            pt.f.at(i / n, i % n) = fDigits[i];
        std::fill(phiDigits.begin(), phiDigits.end(), 0);
        do {
            std::size_t idx = 0;
            for (std::uint32_t i = 0; i < m; ++i)
                for (std::uint32_t r = 0; r < d; ++r)
                    for (std::uint32_t c = 0; c < d; ++c) pt.phi[i].at(r, c) = phiDigits[idx++];
            visit(pt);
        } while (bump(phiDigits));
    } while (bump(fDigits));
}

inline void checkSearchSpace(std::uint32_t m, std::uint32_t n, std::uint32_t d, std::uint64_t p,
                             const BigInt& maxSpace, const char* who) {
    const BigInt space = pow(BigInt(p), n * d + m * d * d);
    if (space > maxSpace)
        throw CapExceeded(std::string(who) + ": search space " + space.str() +
                          " tuples exceeds cap " + maxSpace.str());
}

} // namespace detail

/// Counts stable tuples exhaustively and divides by |GL_d(F_p)|; the result
/// must match predictedPointCount.
inline CensusReport bruteForceCount(std::uint32_t m, std::uint32_t n, std::uint32_t d,
                                    std::uint64_t p, const BigInt& maxSpace = BigInt(1) << 26) {
    detail::checkSearchSpace(m, n, d, p, maxSpace, "bruteForceCount");
    const PrimeField field(p);
    CensusReport rep;
    rep.m = m;
    rep.n = n;
    rep.d = d;
    rep.p = p;
    rep.glOrderValue = glOrder(d, p);
    if (d == 0) {
        rep.stableTupleCount = 1;
        rep.pointCount = 1;
        return rep;
    }
    std::uint64_t stable = 0;
    detail::forEachTuple(m, n, d, field, [&](const CellPoint<PrimeField>& pt) {
        if (isStable(pt)) ++stable;
    });
    rep.stableTupleCount = stable;
    if (rep.stableTupleCount % rep.glOrderValue != 0)
        throw std::logic_error("bruteForceCount: stable count not divisible by |GL|");
    rep.pointCount = rep.stableTupleCount / rep.glOrderValue;
    return rep;
}

/// Classifies every stable tuple into its cell; each cell must carry
/// exactly p^{d(F)} points.
inline CensusReport cellCensus(std::uint32_t m, std::uint32_t n, std::uint32_t d, std::uint64_t p,
                               const BigInt& maxSpace = BigInt(1) << 26) {
    detail::checkSearchSpace(m, n, d, p, maxSpace, "cellCensus");
    const PrimeField field(p);
    CensusReport rep;
    rep.m = m;
    rep.n = n;
    rep.d = d;
    rep.p = p;
    rep.glOrderValue = glOrder(d, p);
    rep.withPerCell = true;
    if (d == 0) {
        rep.stableTupleCount = 1;
        rep.pointCount = 1;
        rep.perCell[formatForest(Forest::trusted(m, std::vector<Tree>(n)))] = 1;
        return rep;
    }
    std::map<std::string, std::uint64_t> tuplesPerCell;
    std::uint64_t stable = 0;
    detail::forEachTuple(m, n, d, field, [&](const CellPoint<PrimeField>& pt) {
        if (!isStable(pt)) return;
        ++stable;
        ++tuplesPerCell[formatForest(classifyCell(pt))];
    });
    rep.stableTupleCount = stable;
    if (rep.stableTupleCount % rep.glOrderValue != 0)
        throw std::logic_error("cellCensus: stable count not divisible by |GL|");
    rep.pointCount = rep.stableTupleCount / rep.glOrderValue;
    for (const auto& [cell, count] : tuplesPerCell) {
        if (BigInt(count) % rep.glOrderValue != 0)
            throw std::logic_error("cellCensus: cell count not divisible by |GL|");
        rep.perCell[cell] = BigInt(count) / rep.glOrderValue;
    }
    return rep;
}

} // namespace nchilb
