#pragma once

#include "nchilb/bigint.hpp"
#include "nchilb/qjet.hpp"
#include "nchilb/qpolynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nchilb {

// Coefficient rings for the truncated series machinery. Each ring provides
// zero/one, addTo, mul, and multiplication by q^e; the functional-equation
// solver below is generic over them. Polynomials give the full generating
// function, jets give moments at q = 1, and the q = 1 ring gives plain
// Euler-characteristic numbers.

struct PolyCoeffRing {
    using Value = QPolynomial;
    Value zero() const { return {}; }
    Value one() const { return QPolynomial(1); }
    void addTo(Value& a, const Value& b) const { a += b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mulQPower(const Value& a, std::uint64_t e) const { return a.shifted(e); }
};

struct JetCoeffRing {
    int order = 0;
    using Value = QJet;
    Value zero() const { return QJet(order, 0); }
    Value one() const { return QJet(order, 1); }
    void addTo(Value& a, const Value& b) const { a += b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mulQPower(const Value& a, std::uint64_t e) const {
        return a * QJet::qPower(order, static_cast<std::int64_t>(e));
    }
};

struct EulerCoeffRing {
    using Value = BigInt;
    Value zero() const { return 0; }
    Value one() const { return 1; }
    void addTo(Value& a, const Value& b) const { a += b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value mulQPower(const Value& a, std::uint64_t) const { return a; }
};

/// Solves f = 1 + t * prod_{i=0}^{m-1} f(q, q^i t) degree by degree.
/// Coefficient d of the product depends only on f_0..f_d, so the partial
/// products are extended incrementally: m-1 convolution steps per degree.
template <class Ring>
std::vector<typename Ring::Value> zetaBarOneSeries(const Ring& ring, std::uint32_t m, int dmax) {
    if (m < 1) throw std::invalid_argument("zetaBarOneSeries: arity must be >= 1");
    if (dmax < 0) throw std::invalid_argument("zetaBarOneSeries: dmax must be >= 0");
    using Value = typename Ring::Value;
    std::vector<Value> f(static_cast<std::size_t>(dmax) + 1, ring.zero());
    f[0] = ring.one();
    if (dmax == 0) return f;
    // partial[j][a] = [t^a] prod_{i=0..j} f(q, q^i t), for j = 1..m-1
    std::vector<std::vector<Value>> partial(
        m, std::vector<Value>(static_cast<std::size_t>(dmax), ring.zero()));
    for (int d = 1; d <= dmax; ++d) {
        const int a = d - 1;
        for (std::uint32_t j = 1; j < m; ++j) {
            Value acc = ring.zero();
            for (int s = 0; s <= a; ++s) {
                const int b = a - s;
                const Value& left = j == 1 ? f[static_cast<std::size_t>(s)]
                                           : partial[j - 1][static_cast<std::size_t>(s)];
                ring.addTo(acc, ring.mul(left, ring.mulQPower(f[static_cast<std::size_t>(b)],
                                                              static_cast<std::uint64_t>(j) *
                                                                  static_cast<std::uint64_t>(b))));
            }
            partial[j][static_cast<std::size_t>(a)] = std::move(acc);
        }
        f[static_cast<std::size_t>(d)] =
            m == 1 ? f[static_cast<std::size_t>(a)] : partial[m - 1][static_cast<std::size_t>(a)];
    }
    return f;
}

/// The n-root series prod_{i=0}^{n-1} f(q, q^i t), truncated at t^dmax.
template <class Ring>
std::vector<typename Ring::Value> zetaBarSeries(const Ring& ring, std::uint32_t m, std::uint32_t n,
                                                int dmax) {
    if (n < 1) throw std::invalid_argument("zetaBarSeries: need n >= 1");
    std::vector<typename Ring::Value> f = zetaBarOneSeries(ring, m, dmax);
    std::vector<typename Ring::Value> acc = f;
    for (std::uint32_t i = 1; i < n; ++i) {
        std::vector<typename Ring::Value> next(static_cast<std::size_t>(dmax) + 1, ring.zero());
        for (int d = 0; d <= dmax; ++d)
            for (int s = 0; s <= d; ++s) {
                const int b = d - s;
                ring.addTo(next[static_cast<std::size_t>(d)],
                           ring.mul(acc[static_cast<std::size_t>(s)],
                                    ring.mulQPower(f[static_cast<std::size_t>(b)],
                                                   static_cast<std::uint64_t>(i) *
                                                       static_cast<std::uint64_t>(b))));
            }
        acc = std::move(next);
    }
    return acc;
}

} // namespace nchilb
