#pragma once

#include "nchilb/bigint.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/report.hpp"
#include "nchilb/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nchilb {

/// A t-truncated series with polynomial coefficients in q.
struct TSeries {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    int dmax = 0;
    std::vector<QPolynomial> coeff; // coeff[d] = coefficient of t^d

    const QPolynomial& at(int d) const { return coeff[static_cast<std::size_t>(d)]; }
};

/// Modified zeta function: coefficient of t^d is sum_F q^{d'(F)} over
/// F_{d,n}^{(m)}, computed through the functional equation.
inline TSeries zetaBar(std::uint32_t m, std::uint32_t n, int dmax) {
    TSeries s{m, n, dmax, zetaBarSeries(PolyCoeffRing{}, m, n, dmax)};
    return s;
}

/// Unmodified zeta function: coefficient of t^d is sum_F q^{d(F)}; obtained
/// from the modified one by the exponent shift (m-1)d(d+1)/2 + d.
inline TSeries zetaUnmodified(std::uint32_t m, std::uint32_t n, int dmax) {
    TSeries s = zetaBar(m, n, dmax);
    for (int d = 0; d <= dmax; ++d) {
        const auto ud = static_cast<std::uint64_t>(d);
        s.coeff[static_cast<std::size_t>(d)] =
            s.coeff[static_cast<std::size_t>(d)].shifted((m - 1) * ud * (ud + 1) / 2 + ud);
    }
    return s;
}

/// gamma^{(m)}(q,t): coefficient of t^d is (-1)^d q^{m d(d-1)/2} / (q;q)_d,
/// stored as an exact numerator/denominator pair of polynomials.
struct GammaSeries {
    std::uint32_t m = 1;
    int dmax = 0;
    std::vector<QPolynomial> num;
    std::vector<QPolynomial> den;
};

inline GammaSeries gammaSeries(std::uint32_t m, int dmax) {
    if (m < 1) throw std::invalid_argument("gammaSeries: arity must be >= 1");
    if (dmax < 0) throw std::invalid_argument("gammaSeries: dmax must be >= 0");
    GammaSeries g;
    g.m = m;
    g.dmax = dmax;
    QPolynomial poch(1);
    for (int d = 0; d <= dmax; ++d) {
        const auto ud = static_cast<std::uint64_t>(d);
        if (d > 0) poch *= QPolynomial(1) - QPolynomial::monomial(1, ud);
        g.num.push_back(QPolynomial::monomial(d % 2 == 0 ? 1 : -1, m * ud * (ud - 1) / 2));
        g.den.push_back(poch);
    }
    return g;
}

/// Checks gamma(q, q^n t) = zetaBar_n(q,t) * gamma(q,t) coefficientwise up
/// to t^dmax, multiplicatively: both sides of degree d are cleared by
/// (q;q)_d, so only polynomial arithmetic is involved.
inline Report verifyGammaIdentity(std::uint32_t m, std::uint32_t n, int dmax) {
    const TSeries zb = zetaBar(m, n, dmax);
    const GammaSeries g = gammaSeries(m, dmax);
    int firstFail = -1;
    for (int d = 0; d <= dmax && firstFail < 0; ++d) {
        const auto ud = static_cast<std::uint64_t>(d);
        const QPolynomial lhs = g.num[static_cast<std::size_t>(d)].shifted(n * ud);
        QPolynomial rhs;
        for (int b = 0; b <= d; ++b) {
            const int a = d - b;
            rhs += zb.at(a) * g.num[static_cast<std::size_t>(b)] *
                   qPochhammerRange(static_cast<std::uint64_t>(b) + 1, ud);
        }
        if (lhs != rhs) firstFail = d;
    }
    Report r;
    const std::string name = "gamma-identity m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " dmax=" + std::to_string(dmax);
    r.addOutcome(name, "functional-equation recursion vs q-hypergeometric ratio",
                 "identity holds through t^" + std::to_string(dmax),
                 firstFail < 0 ? "identity holds through t^" + std::to_string(dmax)
                               : "first failure at t^" + std::to_string(firstFail),
                 firstFail < 0);
    return r;
}

/// Depth-k convergent of 1/(1 - t/(1 - qt/(1 - q^2 t/...))) as an exact
/// numerator/denominator pair of t-polynomials with q-polynomial coefficients.
struct ContinuedFractionConvergent {
    std::vector<QPolynomial> num; // index = power of t
    std::vector<QPolynomial> den;
};

inline ContinuedFractionConvergent continuedFractionConvergent(int depth) {
    if (depth < 1) throw std::invalid_argument("continuedFractionConvergent: depth must be >= 1");
    std::vector<QPolynomial> num{QPolynomial(1)};
    std::vector<QPolynomial> den{QPolynomial(1)};
    for (int j = depth - 1; j >= 0; --j) {
        // N' = D, D' = D - q^j t N
        std::vector<QPolynomial> newDen = den;
        newDen.resize(std::max(den.size(), num.size() + 1));
        for (std::size_t i = 0; i < num.size(); ++i)
            newDen[i + 1] -= num[i].shifted(static_cast<std::uint64_t>(j));
        num = den;
        den = std::move(newDen);
    }
    return {std::move(num), std::move(den)};
}

/// Verifies zetaBar_1^{(2)} * den = num + O(t^{depth+1}), avoiding division.
inline Report continuedFractionCheck(int depth) {
    const ContinuedFractionConvergent cf = continuedFractionConvergent(depth);
    const TSeries zb = zetaBar(2, 1, depth);
    int firstFail = -1;
    for (int d = 0; d <= depth && firstFail < 0; ++d) {
        QPolynomial prod;
        for (std::size_t i = 0; i < cf.den.size() && i <= static_cast<std::size_t>(d); ++i)
            prod += cf.den[i] * zb.at(d - static_cast<int>(i));
        const QPolynomial expect =
            static_cast<std::size_t>(d) < cf.num.size() ? cf.num[static_cast<std::size_t>(d)]
                                                        : QPolynomial{};
        if (prod != expect) firstFail = d;
    }
    Report r;
    r.addOutcome("continued-fraction m=2 depth=" + std::to_string(depth),
                 "functional-equation recursion vs continued-fraction convergent",
                 "agreement through t^" + std::to_string(depth),
                 firstFail < 0 ? "agreement through t^" + std::to_string(depth)
                               : "first failure at t^" + std::to_string(firstFail),
                 firstFail < 0);
    return r;
}

/// Euler characteristics via the q = 1 integer recursion.
inline std::vector<BigInt> eulerNumbers(std::uint32_t m, std::uint32_t n, int dmax) {
    return zetaBarSeries(EulerCoeffRing{}, m, n, dmax);
}

/// M[d][j] = sum over F in F_{d,1}^{(m)} of d'(F)^j.
struct MomentTable {
    std::uint32_t m = 2;
    int dmax = 0;
    int jmax = 0;
    std::vector<std::vector<BigInt>> sums; // sums[d][j]

    const BigInt& at(int d, int j) const {
        return sums[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
    }
};

/// Power sums of d' over trees, propagated as jets at q = 1 through the
/// coefficient recursion; the falling-factorial data converts to ordinary
/// powers by the Stirling numbers of the second kind.
inline MomentTable momentSums(std::uint32_t m, int dmax, int jmax) {
    if (m < 2) throw std::invalid_argument("momentSums: limit-law moments need m >= 2");
    if (jmax < 0 || jmax > 4) throw std::invalid_argument("momentSums: jmax must be in 0..4");
    static const int kStirling[5][5] = {
        {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 3, 1, 0}, {0, 1, 7, 6, 1}};
    const std::vector<QJet> jets = zetaBarOneSeries(JetCoeffRing{jmax}, m, dmax);
    MomentTable t;
    t.m = m;
    t.dmax = dmax;
    t.jmax = jmax;
    t.sums.resize(static_cast<std::size_t>(dmax) + 1);
    for (int d = 0; d <= dmax; ++d) {
        auto& row = t.sums[static_cast<std::size_t>(d)];
        row.resize(static_cast<std::size_t>(jmax) + 1);
        for (int j = 0; j <= jmax; ++j) {
            BigInt s = 0;
            for (int k = 0; k <= j; ++k)
                s += kStirling[j][k] * jets[static_cast<std::size_t>(d)].deriv(k);
            row[static_cast<std::size_t>(j)] = std::move(s);
        }
    }
    return t;
}

/// Partial sum sum_{d=0}^{D} chi(H_{d,n}^{(m)}) ((m-1)^{m-1}/m^m)^d; the full
/// series converges to (m/(m-1))^n.
inline BigRational specialValuePartialSum(std::uint32_t m, std::uint32_t n, int bigD) {
    if (m < 2) throw std::invalid_argument("specialValuePartialSum: need m >= 2");
    if (bigD < 0) throw std::invalid_argument("specialValuePartialSum: need D >= 0");
    const BigRational x(pow(BigInt(m - 1), m - 1), pow(BigInt(m), m));
    BigRational sum = 0, xp = 1;
    for (int d = 0; d <= bigD; ++d) {
        sum += BigRational(forestCount(m, n, static_cast<std::uint64_t>(d))) * xp;
        xp *= x;
    }
    return sum;
}

} // namespace nchilb
