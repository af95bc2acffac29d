#pragma once

#include "nchilb/bigint.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace nchilb {

/// F_p for a prime p < 2^31; values are canonical representatives 0..p-1.
class PrimeField {
public:
    using Value = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("PrimeField: p out of range");
        for (std::uint64_t f = 2; f * f <= p; ++f)
            if (p % f == 0) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }

    std::uint64_t characteristic() const { return p_; }

    Value zero() const { return 0; }
    Value one() const { return 1; }
    bool isZero(Value a) const { return a == 0; }
    Value add(Value a, Value b) const { return (a + b) % p_; }
    Value sub(Value a, Value b) const { return (a + p_ - b) % p_; }
    Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
    Value mul(Value a, Value b) const { return a * b % p_; }
    Value inv(Value a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // Fermat: a^(p-2)
        Value r = 1, base = a;
        std::uint64_t e = p_ - 2;
        while (e) {
            if (e & 1u) r = mul(r, base);
            base = mul(base, base);
            e >>= 1u;
        }
        return r;
    }
    Value fromInt(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    /// Deterministic sampling straight from the engine words (no
    /// distribution objects, which are implementation-defined).
    Value sample(std::mt19937_64& rng) const { return rng() % p_; }

    std::string descriptor() const { return "Fp:" + std::to_string(p_); }
    std::string toString(Value v) const { return std::to_string(v); }

private:
    std::uint64_t p_;
};

/// Exact rational arithmetic wrapped in the same field interface.
class RationalField {
public:
    using Value = BigRational;

    Value zero() const { return 0; }
    Value one() const { return 1; }
    bool isZero(const Value& a) const { return a == 0; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return 1 / a;
    }
    Value fromInt(std::int64_t v) const { return Value(v); }

    /// Small random rationals: numerator in [-20, 20], denominator in [1, 9].
    Value sample(std::mt19937_64& rng) const {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
        return Value(num, den);
    }

    std::string descriptor() const { return "Q"; }
    std::string toString(const Value& v) const {
        std::string s = numerator(v).str();
        if (denominator(v) != 1) s += "/" + denominator(v).str();
        return s;
    }
};

} // namespace nchilb
