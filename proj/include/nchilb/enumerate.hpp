#pragma once

#include "nchilb/bigint.hpp"
#include "nchilb/errors.hpp"
#include "nchilb/forest.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nchilb {

/// Number of m-ary forests with n roots and d nodes: n/((m-1)d+n) * C(md+n-1, d).
inline BigInt forestCount(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    if (m < 1 || n < 1) throw std::invalid_argument("forestCount: need m >= 1, n >= 1");
    BigInt num = n * binomial(static_cast<std::int64_t>(m) * static_cast<std::int64_t>(d) + n - 1,
                              static_cast<std::int64_t>(d));
    BigInt den = (m - 1) * d + n;
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("forestCount: non-integral quotient");
    return q;
}

/// A slice of the enumeration keyed by the first component's size and the
/// set of children its root carries. Slices are disjoint, cover everything,
/// and each is enumerated in the global order.
struct ForestPartition {
    std::uint64_t firstTreeSize = 0;
    std::uint32_t rootChildMask = 0; // bit i-1 set means child letter i present
};

inline std::vector<ForestPartition> listForestPartitions(std::uint32_t m, std::uint32_t n,
                                                         std::uint64_t d) {
    (void)n;
    std::vector<ForestPartition> out;
    for (std::uint64_t s = d + 1; s-- > 0;) {
        if (s == 0) {
            out.push_back({0, 0});
            continue;
        }
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const auto bits = static_cast<std::uint64_t>(std::popcount(mask));
            if (bits > s - 1) continue;
            if (s >= 2 && bits == 0) continue;
            if (s == 1 && bits != 0) continue;
            out.push_back({s, mask});
        }
    }
    return out;
}

namespace detail {

/// Streams every forest of F_{d,n}^{(m)} in increasing compareForests order.
/// A tree's sorted word list is built left to right; at each step the next
/// word must exceed the previous one and be a child of a present node, so a
/// DFS over the ascending candidate list visits trees in lexicographic order
/// of their word sequences. Components run with sizes descending, matching
/// the larger-tree-first rule.
template <class Fn>
class ForestStream {
public:
    ForestStream(std::uint32_t m, std::uint32_t n, std::uint64_t d, Fn& fn,
                 const ForestPartition* part)
        : m_(m), n_(n), d_(d), fn_(fn), part_(part) {
        scratch_ = Forest::trusted(m, std::vector<Tree>(n));
    }

    bool run() { return component(1, d_); }

    bool component(std::uint32_t k, std::uint64_t remaining) {
        if (k > n_) return fn_(scratch_);
        if (k == n_) return buildTree(k, remaining, 0);
        if (k == 1 && part_) {
            if (part_->firstTreeSize > remaining) return true;
            return buildTree(1, part_->firstTreeSize, remaining - part_->firstTreeSize);
        }
        for (std::uint64_t s = remaining + 1; s-- > 0;)
            if (!buildTree(k, s, remaining - s)) return false;
        return true;
    }

private:
    bool buildTree(std::uint32_t k, std::uint64_t size, std::uint64_t nextBudget) {
        auto& words = scratch_.mutableTrees()[k - 1].mutableWords();
        if (size == 0) {
            if (k == 1 && part_ && part_->rootChildMask != 0) return true;
            return component(k + 1, nextBudget);
        }
        words.emplace_back();
        std::vector<Word> cands;
        std::uint32_t missing = 0;
        for (Letter i = 1; i <= m_; ++i) {
            if (k == 1 && part_) {
                if (!(part_->rootChildMask >> (i - 1) & 1u)) continue;
                ++missing;
            }
            cands.push_back(Word{{i}});
        }
        const bool ok = extend(k, words, cands, size - 1, missing, nextBudget);
        words.pop_back();
        return ok;
    }

    bool extend(std::uint32_t k, std::vector<Word>& words, const std::vector<Word>& cands,
                std::uint64_t remaining, std::uint32_t missingRootChildren,
                std::uint64_t nextBudget) {
        if (missingRootChildren > remaining) return true; // cannot complete this slice
        if (remaining == 0) return component(k + 1, nextBudget);
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
            const Word& chosen = cands[idx];
            std::uint32_t missing = missingRootChildren;
            if (missing > 0 && chosen.length() == 1) --missing;
            words.push_back(chosen);
            std::vector<Word> next;
            next.reserve(cands.size() - idx - 1 + m_);
            std::size_t tail = idx + 1;
            for (Letter i = 1; i <= m_; ++i) {
                Word child = chosen.child(i);
                while (tail < cands.size() && cands[tail] < child) next.push_back(cands[tail++]);
                next.push_back(std::move(child));
            }
            while (tail < cands.size()) next.push_back(cands[tail++]);
            const bool ok = extend(k, words, next, remaining - 1, missing, nextBudget);
            words.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    std::uint32_t m_, n_;
    std::uint64_t d_;
    Fn& fn_;
    const ForestPartition* part_;
    Forest scratch_;
};

} // namespace detail

/// Visits forests in increasing order; fn returns false to stop early.
/// The forest reference is only valid during the call.
template <class Fn>
bool forEachForestUntil(std::uint32_t m, std::uint32_t n, std::uint64_t d, Fn fn,
                        const ForestPartition* part = nullptr) {
    if (m < 1 || n < 1) throw std::invalid_argument("forest enumeration: need m >= 1, n >= 1");
    detail::ForestStream<Fn> gen(m, n, d, fn, part);
    return gen.run();
}

template <class Fn>
void forEachForest(std::uint32_t m, std::uint32_t n, std::uint64_t d, Fn fn,
                   const ForestPartition* part = nullptr) {
    forEachForestUntil(
        m, n, d,
        [&](const Forest& f) {
            fn(f);
            return true;
        },
        part);
}

/// Materializes the enumeration; refuses when the predicted count exceeds the cap.
inline std::vector<Forest> enumerateForests(std::uint32_t m, std::uint32_t n, std::uint64_t d,
                                            std::uint64_t maxCount = 10'000'000) {
    const BigInt predicted = forestCount(m, n, d);
    if (predicted > maxCount)
        throw CapExceeded("enumerateForests: predicted count " + predicted.str() +
                          " exceeds cap " + std::to_string(maxCount));
    std::vector<Forest> out;
    out.reserve(predicted.convert_to<std::size_t>());
    forEachForest(m, n, d, [&](const Forest& f) { out.push_back(f); });
    return out;
}

/// A nondecreasing height sequence 0 <= h_1 <= ... <= h_d with
/// h_i <= (m-1)(i-1) + (n-1).
struct LatticePath {
    std::vector<std::uint64_t> heights;

    bool operator==(const LatticePath&) const = default;
};

inline std::uint64_t coarea(const LatticePath& p, std::uint32_t m, std::uint32_t n) {
    const std::uint64_t d = p.heights.size();
    std::uint64_t area = 0;
    for (std::uint64_t h : p.heights) area += h;
    return dPrimeMax(m, n, d) - area;
}

template <class Fn>
void forEachLatticePath(std::uint32_t m, std::uint32_t n, std::uint64_t d, Fn fn) {
    if (m < 1 || n < 1) throw std::invalid_argument("lattice paths: need m >= 1, n >= 1");
    LatticePath p;
    p.heights.reserve(d);
    auto rec = [&](auto&& self, std::uint64_t i, std::uint64_t prev) -> void {
        if (i > d) {
            fn(const_cast<const LatticePath&>(p));
            return;
        }
        const std::uint64_t bound = (m - 1) * (i - 1) + (n - 1);
        for (std::uint64_t h = prev; h <= bound; ++h) {
            p.heights.push_back(h);
            self(self, i + 1, h);
            p.heights.pop_back();
        }
    };
    rec(rec, 1, 0);
}

inline std::vector<LatticePath> enumeratePaths(std::uint32_t m, std::uint32_t n, std::uint64_t d,
                                               std::uint64_t maxCount = 10'000'000) {
    const BigInt predicted = forestCount(m, n, d); // paths are equinumerous with forests
    if (predicted > maxCount)
        throw CapExceeded("enumeratePaths: predicted count " + predicted.str() + " exceeds cap " +
                          std::to_string(maxCount));
    std::vector<LatticePath> out;
    forEachLatticePath(m, n, d, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

} // namespace nchilb
