#pragma once

#include "nchilb/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nchilb {

/// Dense polynomial in q with exact integer coefficients; no trailing zeros.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(BigInt constant) { // implicit on purpose: integers embed as constants
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPolynomial monomial(const BigInt& coeff, std::uint64_t power) {
        if (coeff == 0) return {};
        std::vector<BigInt> c(power + 1);
        c[power] = coeff;
        return QPolynomial(std::move(c));
    }

    bool isZero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    const BigInt& coeff(std::size_t i) const {
        static const BigInt kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return QPolynomial(std::move(r));
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    /// Multiplication by q^e.
    QPolynomial shifted(std::uint64_t e) const {
        if (isZero() || e == 0) return *this;
        std::vector<BigInt> r(c_.size() + e);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
        return QPolynomial(std::move(r));
    }

    BigInt evaluate(const BigInt& q) const {
        BigInt v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
        return v;
    }

    /// Value at q = 1 (the coefficient sum).
    BigInt sumCoeffs() const {
        BigInt s = 0;
        for (const BigInt& c : c_) s += c;
        return s;
    }

    /// j-th derivative evaluated at q = 1, exactly.
    BigInt derivativeAt1(int j) const {
        BigInt s = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            s += c_[i] * fallingFactorial(static_cast<std::int64_t>(i), j);
        return s;
    }

    bool operator==(const QPolynomial&) const = default;

    std::string str() const {
        if (isZero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            const BigInt a = abs(c_[i]);
            if (i == 0) {
                out += a.str();
            } else {
                if (a != 1) out += a.str() + "*";
                out += i == 1 ? "q" : "q^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// The finite Pochhammer product prod_{j=lo}^{hi} (1 - q^j).
inline QPolynomial qPochhammerRange(std::uint64_t lo, std::uint64_t hi) {
    QPolynomial r(1);
    for (std::uint64_t j = lo; j <= hi && hi != 0; ++j)
        r *= QPolynomial(1) - QPolynomial::monomial(1, j);
    return r;
}

} // namespace nchilb
