#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chordlab/chordlab.hpp"

namespace testsupport {

using namespace chordlab;

inline GaussWord W(const std::string& text) { return parse_gauss_word(text); }
inline CanonicalDiagram D(const std::string& text) {
    return CanonicalDiagram::of(parse_gauss_word(text));
}

inline ModuleElement elem(std::initializer_list<std::pair<long long, const char*>> terms) {
    ModuleElement e;
    for (const auto& [c, w] : terms) e.add_term(D(w), c);
    return e;
}

/// Deterministic across platforms (plain modulo draws, no std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }

    /// Random word with exactly n chords: letters 1..n each twice, shuffled.
    GaussWord word(int n) {
        std::vector<Letter> letters;
        for (Letter c = 1; c <= n; ++c) {
            letters.push_back(c);
            letters.push_back(c);
        }
        for (int i = static_cast<int>(letters.size()) - 1; i > 0; --i)
            std::swap(letters[i], letters[next(i + 1)]);
        return GaussWord(std::move(letters));
    }

    /// Random word with up to max_chords chords (possibly empty).
    GaussWord word_up_to(int max_chords) { return word(static_cast<int>(next(max_chords + 1))); }

    /// A random letter bijection on 1..n into values <= 2n.
    std::vector<std::pair<Letter, Letter>> random_relabeling(int n) {
        std::vector<Letter> targets;
        for (Letter c = 1; c <= 2 * n; ++c) targets.push_back(c);
        for (int i = static_cast<int>(targets.size()) - 1; i > 0; --i)
            std::swap(targets[i], targets[next(i + 1)]);
        std::vector<std::pair<Letter, Letter>> map;
        for (Letter c = 1; c <= n; ++c) map.emplace_back(c, targets[c - 1]);
        return map;
    }

private:
    std::mt19937_64 rng_;
};

/// Independent class-count oracle: partitions the normal-form words of n
/// chords into orbits by closing under rotation and reversal (renormalizing
/// after each step). Uses only word equality, not canonical_form.
inline int orbit_count(int n) {
    std::set<std::vector<Letter>> seen;
    int orbits = 0;
    for (const GaussWord& w0 : generate_normal_words(n)) {
        if (seen.contains(w0.letters())) continue;
        ++orbits;
        std::vector<std::vector<Letter>> stack{w0.letters()};
        seen.insert(w0.letters());
        while (!stack.empty()) {
            const std::vector<Letter> v = stack.back();
            stack.pop_back();
            const GaussWord g = GaussWord::unchecked(v);
            for (int t = 0; t < static_cast<int>(v.size()); ++t) {
                for (const GaussWord& img : {rotated(g, t), reversed(rotated(g, t))}) {
                    std::vector<Letter> nf = normalized_letters(img.letters());
                    if (seen.insert(nf).second) stack.push_back(std::move(nf));
                }
            }
        }
    }
    return orbits;
}

}  // namespace testsupport
