#pragma once

#include "nchilb/errors.hpp"
#include "nchilb/forest.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace nchilb {

// Grammar: forest := tree (';' tree)*; tree := '-' | word (',' word)*;
// word := 'e' | letter ('.' letter)*; letter := decimal integer >= 1.

inline std::string formatWord(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out += '.';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

inline std::string formatForest(const Forest& f) {
    std::string out;
    for (std::uint32_t k = 1; k <= f.roots(); ++k) {
        if (k > 1) out += ';';
        const Tree& t = f.tree(k);
        if (t.empty()) {
            out += '-';
            continue;
        }
        for (std::size_t i = 0; i < t.words().size(); ++i) {
            if (i) out += ',';
            out += formatWord(t.words()[i]);
        }
    }
    return out;
}

namespace detail {

inline std::vector<std::string_view> splitOn(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline Word parseWord(std::string_view text, std::uint32_t m) {
    if (text == "e") return Word{};
    Word w;
    for (std::string_view piece : splitOn(text, '.')) {
        std::uint32_t letter = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), letter);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || letter < 1)
            throw ParseError("malformed word \"" + std::string(text) + "\"");
        if (letter > m)
            throw ParseError("word \"" + std::string(text) + "\": letter " +
                             std::to_string(letter) + " exceeds arity " + std::to_string(m));
        w.letters.push_back(letter);
    }
    return w;
}

} // namespace detail

/// Parses the forest grammar; the number of components is taken from the text.
inline Forest parseForest(std::string_view text, std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("parseForest: arity must be >= 1");
    if (text.empty()) throw ParseError("empty forest text");
    std::vector<Tree> trees;
    for (std::string_view comp : detail::splitOn(text, ';')) {
        if (comp == "-") {
            trees.emplace_back();
            continue;
        }
        if (comp.empty()) throw ParseError("empty tree component (use '-' for an empty tree)");
        std::vector<Word> words;
        for (std::string_view wtext : detail::splitOn(comp, ',')) {
            if (wtext.empty()) throw ParseError("empty word in component");
            words.push_back(detail::parseWord(wtext, m));
        }
        std::sort(words.begin(), words.end());
        for (std::size_t i = 1; i < words.size(); ++i)
            if (words[i] == words[i - 1])
                throw ParseError("duplicate word \"" + formatWord(words[i]) + "\"");
        Tree t = Tree::trustedSorted(std::move(words));
        for (const Word& w : t.words())
            if (!w.empty() && !t.contains(w.parent()))
                throw ParseError("word \"" + formatWord(w) + "\": prefix \"" +
                                 formatWord(w.parent()) + "\" missing");
        trees.push_back(std::move(t));
    }
    return Forest::trusted(m, std::move(trees));
}

} // namespace nchilb
