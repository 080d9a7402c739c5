#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chordlab/diagram.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/gauss_word.hpp"

namespace chordlab {

inline constexpr int kDefaultFuzzChordCap = 8;

enum class MoveType { RI, SRII, WRII, SRIII, WRIII };
enum class MoveDirection { Reduce, Expand, Exchange };

inline std::string to_string(MoveType t) {
    switch (t) {
        case MoveType::RI: return "RI";
        case MoveType::SRII: return "SRII";
        case MoveType::WRII: return "WRII";
        case MoveType::SRIII: return "SRIII";
        case MoveType::WRIII: return "WRIII";
    }
    return "?";
}

inline std::string to_string(MoveDirection d) {
    switch (d) {
        case MoveDirection::Reduce: return "reduce";
        case MoveDirection::Expand: return "expand";
        case MoveDirection::Exchange: return "exchange";
    }
    return "?";
}

/// One applicable rewriting of a word.
///
/// Reduce and exchange sites record the start positions of the matched
/// cyclically adjacent letter pairs (1 pair for RI, 2 for the II moves, 3 for
/// the III moves) plus the letters seen there, so application can verify the
/// site still fits. Expand sites record a rotation and insertion cut instead.
struct MoveSite {
    MoveType type{};
    MoveDirection dir{};
    std::array<int, 3> spots{};      // pair start positions, cyclic
    std::array<Letter, 6> letters{};  // pairs flattened, for validation
    int nspots = 0;
    int rotation = 0;  // expand: rotation applied before inserting
    int cut = 0;       // expand: insertion position within the rotated word
};

namespace detail {

inline Letter at_cyc(const GaussWord& w, int i) {
    const int L = static_cast<int>(w.size());
    return w[((i % L) + L) % L];
}

inline bool spots_disjoint(const GaussWord& w, std::span<const int> spots) {
    const int L = static_cast<int>(w.size());
    std::vector<int> used;
    for (int p : spots) {
        for (int q : {p, (p + 1) % L}) {
            for (int u : used)
                if (u == q) return false;
            used.push_back(q);
        }
    }
    return true;
}

/// Match classification for three letter pairs P, Q, R in cyclic order.
/// The coherent (strong) patterns are rotation-invariant; the weak ones fix a
/// start, so the caller probes all three cyclic starts.
inline bool strong_triple(Letter p1, Letter p2, Letter q1, Letter q2, Letter r1, Letter r2) {
    const bool sigma = p1 == q2 && q1 == r2 && r1 == p2;  // (ij)(ki)(jk)
    const bool tau = p2 == q1 && q2 == r1 && r2 == p1;    // (ji)(ik)(kj)
    return sigma || tau;
}

inline bool weak_triple(Letter p1, Letter p2, Letter q1, Letter q2, Letter r1, Letter r2) {
    const bool wsigma = p1 == q1 && p2 == r1 && q2 == r2;  // (ij)(ik)(jk)
    const bool wtau = p2 == q2 && q1 == r1 && p1 == r2;    // (ji)(ki)(kj)
    return wsigma || wtau;
}

inline Letter fresh_letter(const GaussWord& w) {
    Letter m = 0;
    for (Letter c : w.letters()) m = std::max(m, c);
    return m + 1;
}

}  // namespace detail

/// All sites of the requested move types on w, scanning every rotation.
inline std::vector<MoveSite> find_moves(const GaussWord& w, const std::set<MoveType>& types) {
    std::vector<MoveSite> sites;
    const int L = static_cast<int>(w.size());

    auto want = [&](MoveType t) { return types.contains(t); };

    // reduce/exchange patterns need letters in place
    if (L > 0) {
        if (want(MoveType::RI)) {
            for (int p = 0; p < L; ++p) {
                if (w[p] == detail::at_cyc(w, p + 1)) {
                    if (L == 2 && p == 1) continue;  // same position set as p = 0
                    MoveSite s;
                    s.type = MoveType::RI;
                    s.dir = MoveDirection::Reduce;
                    s.spots[0] = p;
                    s.letters[0] = w[p];
                    s.letters[1] = w[p];
                    s.nspots = 1;
                    sites.push_back(s);
                }
            }
        }
        if (want(MoveType::SRII) || want(MoveType::WRII)) {
            for (int p = 0; p < L; ++p) {
                const Letter a = w[p], b = detail::at_cyc(w, p + 1);
                if (a == b) continue;
                for (int q = p + 1; q < L; ++q) {
                    const Letter c = w[q], e = detail::at_cyc(w, q + 1);
                    if (c == e) continue;
                    const std::array<int, 2> sp{p, q};
                    if (!detail::spots_disjoint(w, std::span<const int>(sp.data(), 2))) continue;
                    MoveType t;
                    if (c == b && e == a)
                        t = MoveType::SRII;  // ...ij...ji...
                    else if (c == a && e == b)
                        t = MoveType::WRII;  // ...ij...ij...
                    else
                        continue;
                    if (!want(t)) continue;
                    MoveSite s;
                    s.type = t;
                    s.dir = MoveDirection::Reduce;
                    s.spots = {p, q, 0};
                    s.letters = {a, b, c, e, 0, 0};
                    s.nspots = 2;
                    sites.push_back(s);
                }
            }
        }
        if (want(MoveType::SRIII) || want(MoveType::WRIII)) {
            std::vector<int> pair_spots;
            for (int p = 0; p < L; ++p)
                if (w[p] != detail::at_cyc(w, p + 1)) pair_spots.push_back(p);
            const int m = static_cast<int>(pair_spots.size());
            for (int ia = 0; ia < m; ++ia)
                for (int ib = ia + 1; ib < m; ++ib)
                    for (int ic = ib + 1; ic < m; ++ic) {
                        const std::array<int, 3> sp{pair_spots[ia], pair_spots[ib], pair_spots[ic]};
                        if (!detail::spots_disjoint(w, std::span<const int>(sp.data(), 3))) continue;
                        std::array<Letter, 6> ls;
                        for (int s2 = 0; s2 < 3; ++s2) {
                            ls[2 * s2] = w[sp[s2]];
                            ls[2 * s2 + 1] = detail::at_cyc(w, sp[s2] + 1);
                        }
                        // three distinct letters, each twice within the spots
                        {
                            std::array<Letter, 6> sorted = ls;
                            std::sort(sorted.begin(), sorted.end());
                            if (sorted[0] != sorted[1] || sorted[2] != sorted[3] ||
                                sorted[4] != sorted[5] || sorted[1] == sorted[2] ||
                                sorted[3] == sorted[4])
                                continue;
                        }
                        auto push = [&](MoveType t, std::array<int, 3> order) {
                            MoveSite s;
                            s.type = t;
                            s.dir = MoveDirection::Exchange;
                            s.spots = order;
                            for (int s2 = 0; s2 < 3; ++s2) {
                                s.letters[2 * s2] = w[order[s2]];
                                s.letters[2 * s2 + 1] = detail::at_cyc(w, order[s2] + 1);
                            }
                            s.nspots = 3;
                            sites.push_back(s);
                        };
                        if (detail::strong_triple(ls[0], ls[1], ls[2], ls[3], ls[4], ls[5])) {
                            if (want(MoveType::SRIII)) push(MoveType::SRIII, sp);
                        } else {
                            // probe the three cyclic starts for a weak match
                            for (int start = 0; start < 3; ++start) {
                                const std::array<int, 3> order{sp[start], sp[(start + 1) % 3],
                                                               sp[(start + 2) % 3]};
                                std::array<Letter, 6> ords;
                                for (int s2 = 0; s2 < 3; ++s2) {
                                    ords[2 * s2] = w[order[s2]];
                                    ords[2 * s2 + 1] = detail::at_cyc(w, order[s2] + 1);
                                }
                                if (detail::weak_triple(ords[0], ords[1], ords[2], ords[3], ords[4],
                                                        ords[5])) {
                                    if (want(MoveType::WRIII)) push(MoveType::WRIII, order);
                                    break;
                                }
                            }
                        }
                    }
        }
    }

    // expand directions
    if (want(MoveType::RI)) {
        const int gaps = L == 0 ? 1 : L;
        for (int g = 0; g < gaps; ++g) {
            MoveSite s;
            s.type = MoveType::RI;
            s.dir = MoveDirection::Expand;
            s.cut = g;
            sites.push_back(s);
        }
    }
    for (MoveType t : {MoveType::SRII, MoveType::WRII}) {
        if (!want(t)) continue;
        const int rots = L == 0 ? 1 : L;
        for (int r = 0; r < rots; ++r)
            for (int p = 0; p <= L; ++p) {
                MoveSite s;
                s.type = t;
                s.dir = MoveDirection::Expand;
                s.rotation = r;
                s.cut = p;
                sites.push_back(s);
            }
    }
    return sites;
}

/// Rewrites w at the site. Reduce removes the matched letters and presents
/// the rest as the rotation that puts the removal at the end; exchange
/// reverses each matched pair; expand inserts fresh letters.
inline GaussWord apply_move(const GaussWord& w, const MoveSite& s) {
    const int L = static_cast<int>(w.size());

    auto check = [&](bool ok) {
        if (!ok) throw StaleSite("move site does not match this word");
    };

    if (s.dir == MoveDirection::Expand) {
        check(s.cut >= 0 && s.cut <= L);
        const Letter f = detail::fresh_letter(w);
        std::vector<Letter> out;
        if (s.type == MoveType::RI) {
            out.reserve(L + 2);
            for (int i = 0; i < s.cut; ++i) out.push_back(w[i]);
            out.push_back(f);
            out.push_back(f);
            for (int i = s.cut; i < L; ++i) out.push_back(w[i]);
            return GaussWord::unchecked(std::move(out));
        }
        check(s.type == MoveType::SRII || s.type == MoveType::WRII);
        check(L == 0 ? s.rotation == 0 : (s.rotation >= 0 && s.rotation < L));
        const Letter i1 = f, j1 = f + 1;
        out.reserve(L + 4);
        for (int t = 0; t < s.cut; ++t) out.push_back(detail::at_cyc(w, s.rotation + t));
        out.push_back(i1);
        out.push_back(j1);
        for (int t = s.cut; t < L; ++t) out.push_back(detail::at_cyc(w, s.rotation + t));
        if (s.type == MoveType::SRII) {
            out.push_back(j1);
            out.push_back(i1);
        } else {
            out.push_back(i1);
            out.push_back(j1);
        }
        return GaussWord::unchecked(std::move(out));
    }

    // reduce / exchange: validate recorded pairs
    check(L >= 2 * s.nspots);
    for (int k = 0; k < s.nspots; ++k) {
        check(s.spots[k] >= 0 && s.spots[k] < L);
        check(w[s.spots[k]] == s.letters[2 * k]);
        check(detail::at_cyc(w, s.spots[k] + 1) == s.letters[2 * k + 1]);
    }
    check(detail::spots_disjoint(w, std::span<const int>(s.spots.data(), s.nspots)));

    if (s.dir == MoveDirection::Exchange) {
        check(s.type == MoveType::SRIII || s.type == MoveType::WRIII);
        std::vector<Letter> tmp = w.letters();
        for (int k = 0; k < s.nspots; ++k) {
            const int p = s.spots[k], q = (p + 1) % L;
            std::swap(tmp[p], tmp[q]);
        }
        const int start = (s.spots[s.nspots - 1] + 2) % L;
        std::vector<Letter> out;
        out.reserve(L);
        for (int t = 0; t < L; ++t) out.push_back(tmp[(start + t) % L]);
        return GaussWord::unchecked(std::move(out));
    }

    check(s.dir == MoveDirection::Reduce);
    std::vector<char> removed(L, 0);
    for (int k = 0; k < s.nspots; ++k) {
        removed[s.spots[k]] = 1;
        removed[(s.spots[k] + 1) % L] = 1;
    }
    const int start = (s.spots[s.nspots - 1] + 2) % L;
    std::vector<Letter> out;
    out.reserve(L - 2 * s.nspots);
    for (int t = 0; t < L; ++t) {
        const int i = (start + t) % L;
        if (!removed[i]) out.push_back(w[i]);
    }
    return GaussWord::unchecked(std::move(out));
}

struct FuzzStep {
    MoveSite site;
    GaussWord word;
};

struct FuzzTrace {
    GaussWord start;
    std::vector<FuzzStep> steps;
    bool truncated = false;  // ran out of applicable moves
};

/// Deterministic random walk: each step applies one applicable move of an
/// allowed type. Expansions are rejected once they would exceed max_chords.
inline FuzzTrace fuzz_walk(const GaussWord& w, const std::set<MoveType>& types, int steps,
                           std::uint64_t seed, int max_chords = kDefaultFuzzChordCap) {
    FuzzTrace trace;
    trace.start = w;
    std::mt19937_64 rng(seed);
    GaussWord cur = w;
    for (int s = 0; s < steps; ++s) {
        std::vector<MoveSite> sites = find_moves(cur, types);
        std::erase_if(sites, [&](const MoveSite& site) {
            if (site.dir != MoveDirection::Expand) return false;
            const int added = site.type == MoveType::RI ? 1 : 2;
            return cur.chords() + added > max_chords;
        });
        if (sites.empty()) {
            trace.truncated = true;
            break;
        }
        const MoveSite& pick = sites[static_cast<std::size_t>(rng() % sites.size())];
        cur = apply_move(cur, pick);
        trace.steps.push_back({pick, cur});
    }
    return trace;
}

inline std::set<MoveType> parse_move_types(const std::string& csv) {
    std::set<MoveType> out;
    std::size_t i = 0;
    while (i <= csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string::npos) j = csv.size();
        const std::string tok = csv.substr(i, j - i);
        if (tok == "RI")
            out.insert(MoveType::RI);
        else if (tok == "SRII")
            out.insert(MoveType::SRII);
        else if (tok == "WRII")
            out.insert(MoveType::WRII);
        else if (tok == "SRIII")
            out.insert(MoveType::SRIII);
        else if (tok == "WRIII")
            out.insert(MoveType::WRIII);
        else if (!tok.empty())
            throw BadToken("unknown move type '" + tok + "'");
        i = j + 1;
    }
    return out;
}

}  // namespace chordlab
