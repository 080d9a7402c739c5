#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chordlab/diagram.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

inline constexpr int kDefaultEnumerationCap = 6;

/// All double-occurrence words with n chords in first-occurrence normal form
/// (letters 1..n, first occurrences increasing). There are (2n-1)!! of them.
inline std::vector<GaussWord> generate_normal_words(int n) {
    std::vector<GaussWord> out;
    const int L = 2 * n;
    std::vector<Letter> word(L, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == L) {
            out.push_back(GaussWord::unchecked(word));
            return;
        }
        if (word[pos] != 0) {
            self(self, pos + 1, used);
            return;
        }
        const Letter letter = used + 1;
        word[pos] = letter;
        for (int q = pos + 1; q < L; ++q) {
            if (word[q] == 0) {
                word[q] = letter;
                self(self, pos + 1, used + 1);
                word[q] = 0;
            }
        }
        word[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// A full listing of the diagram classes with 1..depth chords, ordered by
/// chord count and lexicographically within equal chord count. This fixes the
/// index bijection: indices are 1-based and monotone in chord count.
class DiagramIndex {
public:
    explicit DiagramIndex(int depth) : depth_(depth) {
        prefix_.push_back(0);  // n_0 = 0
        for (int k = 1; k <= depth; ++k) {
            std::set<CanonicalDiagram> classes;
            for (const GaussWord& w : generate_normal_words(k))
                classes.insert(CanonicalDiagram::of(w));
            for (const CanonicalDiagram& d : classes) diagrams_.push_back(d);
            prefix_.push_back(static_cast<int>(diagrams_.size()));
        }
    }

    int depth() const { return depth_; }

    /// n_d = |G_{<=d}|.
    int count_up_to(int d) const {
        if (d < 0 || d > depth_) throw BadBand("depth out of range");
        return prefix_[d];
    }

    int size() const { return static_cast<int>(diagrams_.size()); }

    /// 1-based index access.
    const CanonicalDiagram& at(int index1) const { return diagrams_.at(index1 - 1); }

    const std::vector<CanonicalDiagram>& diagrams() const { return diagrams_; }

private:
    int depth_;
    std::vector<CanonicalDiagram> diagrams_;
    std::vector<int> prefix_;
};

/// Every isomorphism class with 1..d chords, each exactly once.
inline DiagramIndex enumerate_diagrams(int d, int cap = kDefaultEnumerationCap) {
    if (d < 1) throw CapExceeded("depth must be positive");
    if (d > cap)
        throw CapExceeded("depth " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    return DiagramIndex(d);
}

/// An indexed diagram of a band listing.
struct IndexedDiagram {
    int index;  // 1-based position under the fixed bijection
    CanonicalDiagram diagram;
};

/// G_{b,d}: diagrams with index n_{b-1}+1 .. n_d.
inline std::vector<IndexedDiagram> band(const DiagramIndex& idx, int b, int d) {
    if (!(2 <= b && b <= d && d <= idx.depth()))
        throw BadBand("need 2 <= b <= d <= " + std::to_string(idx.depth()));
    std::vector<IndexedDiagram> out;
    for (int i = idx.count_up_to(b - 1) + 1; i <= idx.count_up_to(d); ++i)
        out.push_back({i, idx.at(i)});
    return out;
}

/// A chord is isolated when it crosses no other chord; irreducible means no
/// isolated chord. Chords cross iff their endpoints interleave cyclically,
/// i.e. exactly one endpoint of one lies between the endpoints of the other.
inline bool is_irreducible(const CanonicalDiagram& x) {
    const GaussWord& w = x.word();
    const int n = x.chords();
    if (n == 0) return true;
    std::vector<std::pair<int, int>> pos(n + 1, {-1, -1});
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (pos[w[i]].first < 0)
            pos[w[i]].first = i;
        else
            pos[w[i]].second = i;
    }
    for (int a = 1; a <= n; ++a) {
        bool crossed = false;
        for (int b2 = 1; b2 <= n && !crossed; ++b2) {
            if (a == b2) continue;
            const bool in1 = pos[a].first < pos[b2].first && pos[b2].first < pos[a].second;
            const bool in2 = pos[a].first < pos[b2].second && pos[b2].second < pos[a].second;
            crossed = in1 != in2;
        }
        if (!crossed) return false;
    }
    return true;
}

/// Connected means not a product: no rotation of the word splits into two
/// nonempty blocks that are themselves double-occurrence words.
inline bool is_connected(const CanonicalDiagram& x) {
    const GaussWord& w = x.word();
    const int L = static_cast<int>(w.size());
    if (L == 0) return true;
    const int n = x.chords();
    std::vector<char> open(n + 1);
    for (int t = 0; t < L; ++t) {
        std::fill(open.begin(), open.end(), 0);
        int open_count = 0;
        for (int s = 0; s < L - 1; ++s) {
            const Letter c = w[(t + s) % L];
            if (open[c]) {
                open[c] = 0;
                --open_count;
            } else {
                open[c] = 1;
                ++open_count;
            }
            if (open_count == 0) return false;
        }
    }
    return true;
}

enum class Selector { All, Irr, Conn };

inline bool selector_accepts(Selector s, const CanonicalDiagram& x) {
    switch (s) {
        case Selector::All: return true;
        case Selector::Irr: return is_irreducible(x);
        case Selector::Conn: return is_connected(x);
    }
    return false;
}

inline std::string to_string(Selector s) {
    switch (s) {
        case Selector::All: return "all";
        case Selector::Irr: return "irr";
        case Selector::Conn: return "conn";
    }
    return "?";
}

/// Band members passing the predicate, in index order.
inline std::vector<IndexedDiagram> basis_select(const DiagramIndex& idx, int b, int d, Selector s) {
    std::vector<IndexedDiagram> out;
    for (const IndexedDiagram& e : band(idx, b, d))
        if (selector_accepts(s, e.diagram)) out.push_back(e);
    return out;
}

}  // namespace chordlab
