#pragma once

#include <compare>
#include <span>
#include <vector>

#include "chordlab/gauss_word.hpp"

namespace chordlab {

namespace detail {

/// Lexicographically least reading of the cyclic word over both directions,
/// each reading relabeled so first occurrences run 1, 2, 3, ...
/// The 4n candidate readings cover every rotation and both orientations.
inline std::vector<Letter> canonical_letters(std::span<const Letter> w) {
    const int L = static_cast<int>(w.size());
    if (L == 0) return {};

    // compact alphabet 0..n-1 in first-occurrence order
    std::vector<Letter> compact(L);
    std::vector<Letter> alphabet;
    for (int i = 0; i < L; ++i) {
        int idx = -1;
        for (int a = 0; a < static_cast<int>(alphabet.size()); ++a)
            if (alphabet[a] == w[i]) {
                idx = a;
                break;
            }
        if (idx < 0) {
            idx = static_cast<int>(alphabet.size());
            alphabet.push_back(w[i]);
        }
        compact[i] = idx;
    }
    const int n = static_cast<int>(alphabet.size());

    std::vector<Letter> best(L, 0);
    bool have_best = false;
    std::vector<Letter> relab(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (int t = 0; t < L; ++t) {
            std::fill(relab.begin(), relab.end(), 0);
            Letter next = 0;
            int verdict = 0;  // -1 better, 0 equal so far, +1 worse
            int s = 0;
            std::vector<Letter> cand(L);
            for (; s < L; ++s) {
                const int idx = dir == 0 ? (t + s) % L : ((t - s) % L + L) % L;
                const int c = compact[idx];
                if (relab[c] == 0) relab[c] = ++next;
                cand[s] = relab[c];
                if (have_best && verdict == 0) {
                    if (cand[s] < best[s])
                        verdict = -1;
                    else if (cand[s] > best[s]) {
                        verdict = +1;
                        break;
                    }
                }
            }
            if (!have_best || verdict < 0) {
                have_best = true;
                best = cand;
            }
        }
    }
    return best;
}

}  // namespace detail

/// The canonical representative of a chord diagram, i.e. of the class of a
/// Gauss word under rotation, reversal and relabeling. Letters are exactly
/// 1..n with first occurrences in increasing order, and the word is the
/// lexicographic minimum over its class. Ordered by chord count, then word.
class CanonicalDiagram {
public:
    CanonicalDiagram() = default;  // the empty diagram

    static CanonicalDiagram of(const GaussWord& w) {
        CanonicalDiagram d;
        d.word_ = GaussWord::unchecked(detail::canonical_letters(w.letters()));
        return d;
    }

    const GaussWord& word() const { return word_; }
    int chords() const { return word_.chords(); }

    friend bool operator==(const CanonicalDiagram&, const CanonicalDiagram&) = default;
    friend auto operator<=>(const CanonicalDiagram& a, const CanonicalDiagram& b) {
        if (auto c = a.chords() <=> b.chords(); c != 0) return c;
        return a.word_ <=> b.word_;
    }

private:
    GaussWord word_;
};

inline CanonicalDiagram canonical_form(const GaussWord& w) { return CanonicalDiagram::of(w); }

inline bool isomorphic(const GaussWord& v, const GaussWord& w) {
    if (v.size() != w.size()) return false;
    return detail::canonical_letters(v.letters()) == detail::canonical_letters(w.letters());
}

}  // namespace chordlab
