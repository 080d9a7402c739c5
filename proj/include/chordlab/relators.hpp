#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/module_element.hpp"

namespace chordlab {

inline constexpr int kDefaultRelatorBaseCap = 5;

/// The five move flavors a relator encodes. Each inserts fresh letters into a
/// base word cut into consecutive blocks: one block and letter i for I, two
/// blocks and i,j for the II types, three blocks and i,j,k for the III types.
enum class RelatorType { I, SII, WII, SIII, WIII };

inline int inserted_letters(RelatorType t) {
    switch (t) {
        case RelatorType::I: return 1;
        case RelatorType::SII:
        case RelatorType::WII: return 2;
        case RelatorType::SIII:
        case RelatorType::WIII: return 3;
    }
    return 0;
}

inline int block_count(RelatorType t) { return inserted_letters(t) == 3 ? 3 : inserted_letters(t); }

inline std::string to_string(RelatorType t) {
    switch (t) {
        case RelatorType::I: return "I";
        case RelatorType::SII: return "SII";
        case RelatorType::WII: return "WII";
        case RelatorType::SIII: return "SIII";
        case RelatorType::WIII: return "WIII";
    }
    return "?";
}

namespace detail {

// Term patterns. Tokens: 0,1,2 = blocks S,T,U; 'i','j','k' = fresh letters.
struct TermPattern {
    int sign;
    const char* tokens;  // e.g. "0ij1ki2jk"
};

inline const std::vector<TermPattern>& term_patterns(RelatorType t) {
    static const std::vector<TermPattern> pat_i = {{+1, "0ii"}};
    static const std::vector<TermPattern> pat_sii = {{+1, "0ij1ji"}, {+1, "0i1i"}, {+1, "0j1j"}};
    static const std::vector<TermPattern> pat_wii = {{+1, "0ij1ij"}, {+1, "0i1i"}, {+1, "0j1j"}};
    static const std::vector<TermPattern> pat_siii = {
        {+1, "0ij1ki2jk"}, {+1, "0ij1i2j"}, {+1, "0i1ki2k"}, {+1, "0j1k2jk"},
        {-1, "0ji1ik2kj"}, {-1, "0ji1i2j"}, {-1, "0i1ik2k"}, {-1, "0j1k2kj"}};
    static const std::vector<TermPattern> pat_wiii = {
        {+1, "0ij1ik2jk"}, {+1, "0ij1i2j"}, {+1, "0i1ik2k"}, {+1, "0j1k2jk"},
        {-1, "0ji1ki2kj"}, {-1, "0ji1i2j"}, {-1, "0i1ki2k"}, {-1, "0j1k2kj"}};
    switch (t) {
        case RelatorType::I: return pat_i;
        case RelatorType::SII: return pat_sii;
        case RelatorType::WII: return pat_wii;
        case RelatorType::SIII: return pat_siii;
        case RelatorType::WIII: return pat_wiii;
    }
    return pat_i;
}

}  // namespace detail

/// The formal sum for one relator instance: base word split at `cuts` into
/// consecutive blocks (empty blocks allowed), fresh letters spliced in per
/// the type's template, every term canonicalized and like terms combined.
inline ModuleElement instantiate_relator(RelatorType t, const GaussWord& base,
                                         const std::vector<int>& cuts) {
    const int L = static_cast<int>(base.size());
    const int blocks = block_count(t);
    if (static_cast<int>(cuts.size()) != blocks - 1)
        throw BadCuts("type " + to_string(t) + " needs " + std::to_string(blocks - 1) +
                      " cut position(s)");
    int prev = 0;
    for (int c : cuts) {
        if (c < prev || c > L) throw BadCuts("cut positions must satisfy 0 <= c1 <= ... <= len");
        prev = c;
    }

    std::array<std::pair<int, int>, 3> block_range{};  // [begin, end) per block
    {
        int begin = 0;
        for (int b = 0; b < blocks; ++b) {
            const int end = b < blocks - 1 ? cuts[b] : L;
            block_range[b] = {begin, end};
            begin = end;
        }
    }

    Letter max_letter = 0;
    for (Letter c : base.letters()) max_letter = std::max(max_letter, c);
    const Letter fresh_i = max_letter + 1, fresh_j = max_letter + 2, fresh_k = max_letter + 3;

    ModuleElement out;
    std::vector<Letter> term;
    for (const auto& [sign, tokens] : detail::term_patterns(t)) {
        term.clear();
        for (const char* p = tokens; *p; ++p) {
            switch (*p) {
                case '0':
                case '1':
                case '2': {
                    const auto [b0, e0] = block_range[*p - '0'];
                    for (int q = b0; q < e0; ++q) term.push_back(base[q]);
                    break;
                }
                case 'i': term.push_back(fresh_i); break;
                case 'j': term.push_back(fresh_j); break;
                case 'k': term.push_back(fresh_k); break;
            }
        }
        out.add_term(CanonicalDiagram::of(GaussWord::unchecked(term)), sign);
    }
    return out;
}

/// Drops every term whose chord count lies outside [b, d].
inline ModuleElement project(const ModuleElement& e, int b, int d) {
    if (!(2 <= b && b <= d)) throw BadBand("need 2 <= b <= d");
    ModuleElement out;
    for (const auto& [x, c] : e.terms())
        if (b <= x.chords() && x.chords() <= d) out.add_term(x, c);
    return out;
}

/// The projected relator set for a band: deduplicated, sign-normalized,
/// no zero element, no pair equal up to sign.
struct RelatorSet {
    int b = 0, d = 0;
    std::set<RelatorType> types;
    std::vector<ModuleElement> elements;  // sorted, deterministic
};

/// Generates the full projection of the chosen relator types onto [b, d].
///
/// A term of a type-t relator over a base of m chords has m + k - 1 or m + k
/// chords (k = inserted letters), so base sizes outside
/// [max(0, b-k-1), d-k+1] cannot contribute; `extra_window` widens the range
/// for saturation checks.
inline RelatorSet relator_set(const std::set<RelatorType>& types, int b, int d,
                              int enumeration_cap = kDefaultEnumerationCap,
                              int base_cap = kDefaultRelatorBaseCap, int extra_window = 0) {
    if (!(2 <= b && b <= d)) throw BadBand("need 2 <= b <= d");
    if (d > enumeration_cap)
        throw CapExceeded("band top " + std::to_string(d) + " exceeds cap " +
                          std::to_string(enumeration_cap));
    std::set<ModuleElement> elems;
    for (RelatorType t : types) {
        const int k = inserted_letters(t);
        const int blocks = block_count(t);
        const int lo = std::max(0, b - k - 1);
        const int hi = std::min(d - k + 1 + extra_window, base_cap);
        for (int m = lo; m <= hi; ++m) {
            for (const GaussWord& base : generate_normal_words(m)) {
                const int L = 2 * m;
                auto emit = [&](const std::vector<int>& cuts) {
                    ModuleElement e = project(instantiate_relator(t, base, cuts), b, d);
                    if (!e.is_zero()) elems.insert(e.sign_normalized());
                };
                if (blocks == 1) {
                    emit({});
                } else if (blocks == 2) {
                    for (int a = 0; a <= L; ++a) emit({a});
                } else {
                    for (int a = 0; a <= L; ++a)
                        for (int c = a; c <= L; ++c) emit({a, c});
                }
            }
        }
    }
    RelatorSet out;
    out.b = b;
    out.d = d;
    out.types = types;
    out.elements.assign(elems.begin(), elems.end());
    return out;
}

}  // namespace chordlab
