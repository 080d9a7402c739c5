#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordlab/errors.hpp"

namespace chordlab {

/// Chord labels are positive integers.
using Letter = int;

/// A double-occurrence word: every letter that appears does so exactly twice.
/// The empty word is allowed and stands for the curve with no double points.
///
/// Words are immutable after construction; all operations on them are pure.
class GaussWord {
public:
    GaussWord() = default;

    /// Validates the double-occurrence property (throws NotDoubleOccurrence).
    explicit GaussWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
        validate(letters_);
    }

    /// Wraps a vector that is already known to be a valid word.
    static GaussWord unchecked(std::vector<Letter> letters) {
        GaussWord w;
        w.letters_ = std::move(letters);
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int chords() const { return static_cast<int>(letters_.size() / 2); }
    bool empty() const { return letters_.empty(); }

    Letter operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const GaussWord&, const GaussWord&) = default;
    friend auto operator<=>(const GaussWord& a, const GaussWord& b) {
        return std::lexicographical_compare_three_way(
            a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
    }

private:
    static void validate(const std::vector<Letter>& ls) {
        std::vector<Letter> sorted = ls;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); i += 2) {
            if (sorted[i] <= 0)
                throw NotDoubleOccurrence("letters must be positive integers");
            if (i + 1 >= sorted.size() || sorted[i] != sorted[i + 1])
                throw NotDoubleOccurrence("letter " + std::to_string(sorted[i]) +
                                          " does not occur exactly twice");
            if (i + 2 < sorted.size() && sorted[i + 2] == sorted[i])
                throw NotDoubleOccurrence("letter " + std::to_string(sorted[i]) +
                                          " does not occur exactly twice");
        }
    }

    std::vector<Letter> letters_;
};

/// Relabels so that first occurrences read 1, 2, 3, ...
inline std::vector<Letter> normalized_letters(std::span<const Letter> w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    std::vector<std::pair<Letter, Letter>> map;  // (old, new), small linear scan
    for (Letter c : w) {
        Letter v = 0;
        for (const auto& [o, n] : map)
            if (o == c) {
                v = n;
                break;
            }
        if (v == 0) {
            v = static_cast<Letter>(map.size()) + 1;
            map.emplace_back(c, v);
        }
        out.push_back(v);
    }
    return out;
}

inline GaussWord normalized(const GaussWord& w) {
    return GaussWord::unchecked(normalized_letters(w.letters()));
}

/// Cyclic left rotation by t positions.
inline GaussWord rotated(const GaussWord& w, int t) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return w;
    t = ((t % n) + n) % n;
    std::vector<Letter> out;
    out.reserve(n);
    for (int s = 0; s < n; ++s) out.push_back(w[(t + s) % n]);
    return GaussWord::unchecked(std::move(out));
}

inline GaussWord reversed(const GaussWord& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    return GaussWord::unchecked(std::move(out));
}

/// Applies a letter bijection given as old -> new pairs. The mapping must be
/// injective on the word's letters; unmapped letters are kept.
inline GaussWord relabeled(const GaussWord& w, const std::vector<std::pair<Letter, Letter>>& map) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter c : w.letters()) {
        Letter v = c;
        for (const auto& [o, n] : map)
            if (o == c) {
                v = n;
                break;
            }
        out.push_back(v);
    }
    return GaussWord(std::move(out));
}

/// Product of two words: the second word's letters are shifted past the
/// first's so the label sets are disjoint, then the words are concatenated.
inline GaussWord concat(const GaussWord& v, const GaussWord& w) {
    std::vector<Letter> out = normalized_letters(v.letters());
    const Letter shift = static_cast<Letter>(v.chords());
    for (Letter c : normalized_letters(w.letters())) out.push_back(c + shift);
    return GaussWord::unchecked(std::move(out));
}

/// Parses either whitespace-separated positive integers or a compact run of
/// letters a-z (one chord per letter, numbered by first occurrence).
/// "-" or the empty string denote the empty word.
inline GaussWord parse_gauss_word(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty() || text == "-") return GaussWord{};

    const bool compact = std::all_of(text.begin(), text.end(), [](char c) {
        return c >= 'a' && c <= 'z';
    });
    std::vector<Letter> letters;
    if (compact) {
        for (char c : text) letters.push_back(c - 'a' + 1);
        letters = normalized_letters(letters);
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i == text.size()) break;
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            std::string_view tok = text.substr(i, j - i);
            Letter value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw BadToken("bad token '" + std::string(tok) + "' in word literal");
                if (value > 1000000) throw BadToken("token too large: " + std::string(tok));
                value = value * 10 + (c - '0');
            }
            if (value <= 0) throw BadToken("bad token '" + std::string(tok) + "' in word literal");
            letters.push_back(value);
            i = j;
        }
    }
    return GaussWord(std::move(letters));  // validates double occurrence
}

/// Integer letters separated by single spaces; the empty word prints as "-".
inline std::string to_string(const GaussWord& w) {
    if (w.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace chordlab
