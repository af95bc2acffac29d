#pragma once

#include "nchilb/errors.hpp"
#include "nchilb/words.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nchilb {

/// A finite prefix-closed word set, stored as a lexicographically sorted
/// sequence. Sorted order coincides with depth-first preorder.
class Tree {
public:
    Tree() = default;

    /// Validating factory: sorts, rejects duplicates and prefix-closure violations.
    static Tree fromWords(std::vector<Word> words) {
        std::sort(words.begin(), words.end());
        for (std::size_t i = 1; i < words.size(); ++i)
            if (words[i] == words[i - 1])
                throw std::invalid_argument("duplicate word in tree");
        Tree t;
        t.words_ = std::move(words);
        for (const Word& w : t.words_)
            if (!w.empty() && !t.contains(w.parent()))
                throw std::invalid_argument("tree is not prefix-closed");
        return t;
    }

    /// Caller guarantees sortedness and prefix closure.
    static Tree trustedSorted(std::vector<Word> words) {
        Tree t;
        t.words_ = std::move(words);
        return t;
    }

    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    bool contains(const Word& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

    Letter maxLetter() const {
        Letter m = 0;
        for (const Word& w : words_) m = std::max(m, w.maxLetter());
        return m;
    }

    bool operator==(const Tree& other) const { return words_ == other.words_; }

    std::vector<Word>& mutableWords() { return words_; } // for in-place builders

private:
    std::vector<Word> words_;
};

/// Total order on trees: larger cardinality first, ties broken at the first
/// differing sorted word.
inline std::strong_ordering compareTrees(const Tree& a, const Tree& b) {
    if (a.size() != b.size())
        return a.size() > b.size() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    return a.words() <=> b.words();
}

/// An n-tuple of trees over the alphabet {1..m}.
class Forest {
public:
    Forest() : m_(1), trees_(1) {}

    Forest(std::uint32_t m, std::vector<Tree> trees) : m_(m), trees_(std::move(trees)) {
        if (m_ < 1) throw std::invalid_argument("arity m must be >= 1");
        if (trees_.empty()) throw std::invalid_argument("forest needs at least one component");
        for (const Tree& t : trees_)
            if (t.maxLetter() > m_)
                throw std::invalid_argument("forest contains a letter exceeding the arity");
    }

    static Forest trusted(std::uint32_t m, std::vector<Tree> trees) {
        Forest f;
        f.m_ = m;
        f.trees_ = std::move(trees);
        return f;
    }

    std::uint32_t arity() const { return m_; }
    std::uint32_t roots() const { return static_cast<std::uint32_t>(trees_.size()); }

    const std::vector<Tree>& trees() const { return trees_; }
    const Tree& tree(std::uint32_t k) const { return trees_[k - 1]; } // 1-based

    std::size_t size() const {
        std::size_t s = 0;
        for (const Tree& t : trees_) s += t.size();
        return s;
    }

    bool contains(const NodeRef& n) const {
        return n.component >= 1 && n.component <= roots() && tree(n.component).contains(n.word);
    }

    /// All nodes (k,w) in increasing node order.
    std::vector<NodeRef> nodes() const {
        std::vector<NodeRef> out;
        out.reserve(size());
        for (std::uint32_t k = 1; k <= roots(); ++k)
            for (const Word& w : tree(k).words()) out.push_back({k, w});
        return out;
    }

    bool operator==(const Forest& other) const {
        return m_ == other.m_ && trees_ == other.trees_;
    }

    std::vector<Tree>& mutableTrees() { return trees_; } // for in-place builders

private:
    std::uint32_t m_;
    std::vector<Tree> trees_;
};

inline std::strong_ordering compareForests(const Forest& a, const Forest& b) {
    if (a.arity() != b.arity() || a.roots() != b.roots())
        throw std::invalid_argument("compareForests: mismatched (m, n) parameters");
    for (std::uint32_t k = 1; k <= a.roots(); ++k) {
        auto c = compareTrees(a.tree(k), b.tree(k));
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

/// All pairs critical for F, in increasing node order. A pair (k,w) is
/// critical when w is the root of an empty component, or a missing child of
/// a node of the component.
inline std::vector<NodeRef> criticalSet(const Forest& f) {
    std::vector<NodeRef> out;
    const std::uint32_t m = f.arity();
    for (std::uint32_t k = 1; k <= f.roots(); ++k) {
        const Tree& t = f.tree(k);
        std::size_t begin = out.size();
        if (t.empty()) {
            out.push_back({k, Word{}});
            continue;
        }
        for (const Word& w : t.words())
            for (Letter i = 1; i <= m; ++i)
                if (Word c = w.child(i); !t.contains(c)) out.push_back({k, std::move(c)});
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end(),
                  [](const NodeRef& a, const NodeRef& b) { return a.word < b.word; });
    }
    return out;
}

inline std::size_t criticalCount(const Forest& f) {
    return (f.arity() - 1) * f.size() + f.roots();
}

/// d(F) = |D(F)|, the number of (node, critical) pairs with node < critical.
/// Both lists are sorted, so a single merge pass suffices.
inline std::uint64_t dStat(const Forest& f) {
    const std::vector<NodeRef> nodes = f.nodes();
    const std::vector<NodeRef> crit = criticalSet(f);
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (const NodeRef& c : crit) {
        while (i < nodes.size() && nodes[i] < c) ++i;
        total += i;
    }
    return total;
}

/// D(F) materialized, grouped by critical pair (target-major, sources ascending).
inline std::vector<DPair> dPairs(const Forest& f) {
    const std::vector<NodeRef> nodes = f.nodes();
    const std::vector<NodeRef> crit = criticalSet(f);
    std::vector<DPair> out;
    for (const NodeRef& c : crit)
        for (const NodeRef& n : nodes) {
            if (!(n < c)) break;
            out.push_back({n, c});
        }
    return out;
}

/// d'(F) = d(F) - (m-1)|F|(|F|+1)/2 - |F|; the quadratic shift removed.
inline std::uint64_t dPrime(const Forest& f) {
    const std::uint64_t s = f.size();
    const std::uint64_t shift = (f.arity() - 1) * s * (s + 1) / 2 + s;
    const std::uint64_t d = dStat(f);
    if (d < shift) throw std::logic_error("dPrime: negative normalized statistic");
    return d - shift;
}

/// Largest attainable d'(F) over F in F_{d,n}^{(m)}.
inline std::uint64_t dPrimeMax(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    return (m - 1) * d * (d - 1) / 2 + (n - 1) * d;
}

/// Joins m trees under a new root: g(S_1..S_m) = {iw : w in S_i} + {()}.
inline Tree graft(std::uint32_t m, const std::vector<Tree>& children) {
    if (children.size() != m)
        throw std::invalid_argument("graft: expected exactly m child trees");
    std::vector<Word> words;
    std::size_t total = 1;
    for (const Tree& t : children) total += t.size();
    words.reserve(total);
    words.emplace_back();
    for (std::uint32_t i = 1; i <= m; ++i)
        for (const Word& w : children[i - 1].words()) {
            Word pw;
            pw.letters.reserve(w.length() + 1);
            pw.letters.push_back(i);
            pw.letters.insert(pw.letters.end(), w.letters.begin(), w.letters.end());
            words.push_back(std::move(pw));
        }
    // Prefixing preserves order, and blocks arrive in letter order.
    return Tree::trustedSorted(std::move(words));
}

/// Inverse of graft; the tree must be non-empty.
inline std::vector<Tree> ungraft(std::uint32_t m, const Tree& t) {
    if (t.empty()) throw std::invalid_argument("ungraft: tree is empty");
    std::vector<std::vector<Word>> parts(m);
    for (const Word& w : t.words()) {
        if (w.empty()) continue;
        Word sub;
        sub.letters.assign(w.letters.begin() + 1, w.letters.end());
        parts[w.letters.front() - 1].push_back(std::move(sub));
    }
    std::vector<Tree> out;
    out.reserve(m);
    for (auto& p : parts) out.push_back(Tree::trustedSorted(std::move(p)));
    return out;
}

/// Every node has m children or none.
inline bool isPlane(const Forest& f) {
    const std::uint32_t m = f.arity();
    for (const Tree& t : f.trees())
        for (const Word& w : t.words()) {
            std::uint32_t present = 0;
            for (Letter i = 1; i <= m; ++i)
                if (t.contains(w.child(i))) ++present;
            if (present != 0 && present != m) return false;
        }
    return true;
}

/// F -> F + C(F) componentwise; a plane forest with m|F| + n nodes.
inline Forest toPlaneForest(const Forest& f) {
    std::vector<NodeRef> crit = criticalSet(f);
    std::vector<Tree> trees;
    trees.reserve(f.roots());
    std::size_t ci = 0;
    for (std::uint32_t k = 1; k <= f.roots(); ++k) {
        std::vector<Word> merged = f.tree(k).words();
        while (ci < crit.size() && crit[ci].component == k)
            merged.push_back(crit[ci++].word);
        std::sort(merged.begin(), merged.end());
        trees.push_back(Tree::trustedSorted(std::move(merged)));
    }
    return Forest::trusted(f.arity(), std::move(trees));
}

/// Keeps exactly the nodes with m successors; inverse of toPlaneForest.
inline Forest fromPlaneForest(const Forest& f) {
    if (!isPlane(f))
        throw std::invalid_argument("fromPlaneForest: input forest is not plane");
    const std::uint32_t m = f.arity();
    std::vector<Tree> trees;
    trees.reserve(f.roots());
    for (const Tree& t : f.trees()) {
        std::vector<Word> kept;
        for (const Word& w : t.words())
            if (t.contains(w.child(1))) kept.push_back(w);
        trees.push_back(Tree::trustedSorted(std::move(kept)));
    }
    return Forest::trusted(m, std::move(trees));
}

} // namespace nchilb
