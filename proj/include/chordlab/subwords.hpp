#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "chordlab/diagram.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/module_element.hpp"

namespace chordlab {

/// Subset enumeration is 2^n; words beyond this need an explicit opt-in.
inline constexpr int kDefaultSubwordLimit = 12;

/// One chord subset of a parent word together with the induced word
/// (all positions of dropped chords deleted, remaining order kept).
struct SubwordSelection {
    GaussWord parent;
    std::vector<Letter> kept_chords;  // letters of the parent that survive
    GaussWord induced;
};

namespace detail {

/// Distinct letters of w in first-occurrence order.
inline std::vector<Letter> distinct_letters(const GaussWord& w) {
    std::vector<Letter> out;
    for (Letter c : w.letters()) {
        bool seen = false;
        for (Letter o : out)
            if (o == c) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(c);
    }
    return out;
}

/// Calls fn(mask, induced_letters) for every chord subset of g. Bit i of the
/// mask selects the i-th distinct letter (first-occurrence order). The
/// induced buffer is reused between calls.
template <typename F>
void for_each_chord_subset(const GaussWord& g, F&& fn) {
    const std::vector<Letter> letters = distinct_letters(g);
    const int n = static_cast<int>(letters.size());
    const int L = static_cast<int>(g.size());
    std::vector<int> bit_of(L);
    for (int i = 0; i < L; ++i) {
        for (int a = 0; a < n; ++a)
            if (letters[a] == g[i]) {
                bit_of[i] = a;
                break;
            }
    }
    std::vector<Letter> induced;
    induced.reserve(L);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        induced.clear();
        for (int i = 0; i < L; ++i)
            if (mask & (1u << bit_of[i])) induced.push_back(g[i]);
        fn(mask, induced);
    }
}

}  // namespace detail

inline void check_subword_limit(const GaussWord& g, int limit) {
    if (g.chords() > limit)
        throw TooManyChords("word has " + std::to_string(g.chords()) +
                            " chords, limit is " + std::to_string(limit));
}

/// All 2^n chord subsets of G, including the empty one and the full word.
inline std::vector<SubwordSelection> subwords(const GaussWord& g, int limit = kDefaultSubwordLimit) {
    check_subword_limit(g, limit);
    const std::vector<Letter> letters = detail::distinct_letters(g);
    std::vector<SubwordSelection> out;
    out.reserve(std::size_t{1} << letters.size());
    detail::for_each_chord_subset(g, [&](std::uint32_t mask, const std::vector<Letter>& induced) {
        SubwordSelection sel;
        sel.parent = g;
        for (int a = 0; a < static_cast<int>(letters.size()); ++a)
            if (mask & (1u << a)) sel.kept_chords.push_back(letters[a]);
        sel.induced = GaussWord::unchecked(induced);
        out.push_back(std::move(sel));
    });
    return out;
}

/// x(G): the number of chord subsets of G whose induced word is isomorphic
/// to x. Depends only on the class of G.
inline std::int64_t count_subdiagrams(const CanonicalDiagram& x, const GaussWord& g,
                                      int limit = kDefaultSubwordLimit) {
    check_subword_limit(g, limit);
    const int k = x.chords();
    if (k > g.chords()) return 0;
    std::int64_t count = 0;
    detail::for_each_chord_subset(g, [&](std::uint32_t mask, const std::vector<Letter>& induced) {
        if (std::popcount(mask) != k) return;
        if (detail::canonical_letters(induced) == x.word().letters()) ++count;
    });
    return count;
}

/// Counts sub-diagram classes of every size in `sizes` with one pass over the
/// chord subsets of G; lookups for many target diagrams then cost nothing.
class SubdiagramCounter {
public:
    SubdiagramCounter(const GaussWord& g, const std::set<int>& sizes,
                      int limit = kDefaultSubwordLimit) {
        check_subword_limit(g, limit);
        detail::for_each_chord_subset(g, [&](std::uint32_t mask, const std::vector<Letter>& induced) {
            const int k = std::popcount(mask);
            if (!sizes.contains(k)) return;
            ++counts_[detail::canonical_letters(induced)];
        });
    }

    std::int64_t count(const CanonicalDiagram& x) const {
        auto it = counts_.find(x.word().letters());
        return it == counts_.end() ? 0 : it->second;
    }

private:
    std::map<std::vector<Letter>, std::int64_t> counts_;
};

/// Both sides of the decomposition x(G) = sum over sub-words z of x~(z).
/// The left side counts subsets of size chords(x) directly; the right side
/// sums the indicator over all 2^n sub-words.
inline std::pair<std::int64_t, std::int64_t> decompose_sum_identity(
    const CanonicalDiagram& x, const GaussWord& g, int limit = kDefaultSubwordLimit) {
    const std::int64_t lhs = count_subdiagrams(x, g, limit);
    std::int64_t rhs = 0;
    detail::for_each_chord_subset(g, [&](std::uint32_t, const std::vector<Letter>& induced) {
        ModuleElement z;
        z.add_term(CanonicalDiagram::of(GaussWord::unchecked(induced)), 1);
        rhs += tilde_eval(x, z);
    });
    return {lhs, rhs};
}

}  // namespace chordlab
