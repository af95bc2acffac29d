#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nchilb {

using Letter = std::uint32_t; // 1-based

/// A finite word over the alphabet {1..m}. The empty word is valid.
/// Comparison is lexicographic with a word preceding all of its extensions,
/// which is exactly elementwise comparison of the letter sequences.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word child(Letter i) const {
        Word w = *this;
        w.letters.push_back(i);
        return w;
    }

    /// Longest proper prefix; precondition: non-empty.
    Word parent() const {
        Word w = *this;
        w.letters.pop_back();
        return w;
    }

    Letter lastLetter() const { return letters.back(); }

    bool isPrefixOf(const Word& other) const {
        if (length() > other.length()) return false;
        for (std::size_t i = 0; i < length(); ++i)
            if (letters[i] != other.letters[i]) return false;
        return true;
    }

    Letter maxLetter() const {
        Letter m = 0;
        for (Letter l : letters) m = l > m ? l : m;
        return m;
    }

    auto operator<=>(const Word&) const = default;
};

/// A node of a forest: component index (1-based) plus the word within it.
/// The node order is (component, word), matching the free-forest ordering.
struct NodeRef {
    std::uint32_t component = 1;
    Word word;

    auto operator<=>(const NodeRef&) const = default;
};

/// An element of D(S_*): a forest node strictly preceding a critical pair.
struct DPair {
    NodeRef source; // in S_*
    NodeRef target; // in C(S_*)

    auto operator<=>(const DPair&) const = default;
};

} // namespace nchilb
