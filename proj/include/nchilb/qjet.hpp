#pragma once

#include "nchilb/bigint.hpp"

#include <cstdint>
#include <vector>

namespace nchilb {

/// Truncated Taylor data of a polynomial at q = 1: the values of the
/// derivatives 0..order. Products follow the Leibniz rule, so pushing jets
/// through a coefficient recursion tracks moments without carrying the
/// full polynomials.
class QJet {
public:
    QJet() = default;
    QJet(int order, BigInt constant) : v_(static_cast<std::size_t>(order) + 1) {
        v_[0] = std::move(constant);
    }
    explicit QJet(std::vector<BigInt> derivs) : v_(std::move(derivs)) {}

    int order() const { return static_cast<int>(v_.size()) - 1; }
    const BigInt& deriv(int j) const { return v_[static_cast<std::size_t>(j)]; }
    const std::vector<BigInt>& derivs() const { return v_; }

    /// Jet of q^e at q = 1.
    static QJet qPower(int order, std::int64_t e) {
        std::vector<BigInt> v(static_cast<std::size_t>(order) + 1);
        v[0] = 1;
        for (int i = 1; i <= order; ++i) v[static_cast<std::size_t>(i)] = v[i - 1] * (e - i + 1);
        return QJet(std::move(v));
    }

    QJet& operator+=(const QJet& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }

    friend QJet operator*(const QJet& a, const QJet& b) {
        const int n = a.order();
        std::vector<BigInt> r(static_cast<std::size_t>(n) + 1);
        // binomial row built incrementally per j
        for (int j = 0; j <= n; ++j) {
            BigInt binom = 1;
            for (int i = 0; i <= j; ++i) {
                r[j] += binom * a.v_[i] * b.v_[j - i];
                binom = binom * (j - i) / (i + 1);
            }
        }
        return QJet(std::move(r));
    }

    bool operator==(const QJet&) const = default;

private:
    std::vector<BigInt> v_;
};

} // namespace nchilb
