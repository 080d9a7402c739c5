#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "testsupport.hpp"

using namespace chordlab;
using testsupport::D;
using testsupport::elem;
using testsupport::W;

namespace {

std::set<ModuleElement> as_set(const RelatorSet& rs) {
    return {rs.elements.begin(), rs.elements.end()};
}

std::set<ModuleElement> normalized_set(std::initializer_list<ModuleElement> elems) {
    std::set<ModuleElement> out;
    for (const ModuleElement& e : elems) out.insert(e.sign_normalized());
    return out;
}

}  // namespace

TEST_CASE("instantiate: strong III with empty base") {
    const ModuleElement r = instantiate_relator(RelatorType::SIII, GaussWord{}, {0, 0});
    CHECK(r == elem({{1, "1 2 3 1 2 3"}, {3, "1 2 1 2"}, {-3, "1 1 2 2"}, {-1, "1 1 2 2 3 3"}}));
}

TEST_CASE("instantiate: strong III over a one-chord base, both cuts") {
    // both base letters in the first block
    const ModuleElement r1 = instantiate_relator(RelatorType::SIII, W("1 1"), {2, 2});
    CHECK(project(r1, 2, 3) ==
          elem({{3, "1 1 2 3 2 3"}, {-2, "1 1 2 3 3 2"}, {-1, "1 1 2 2 3 3"}}));
    // base letters split between the first two blocks
    const ModuleElement r2 = instantiate_relator(RelatorType::SIII, W("1 1"), {1, 2});
    CHECK(project(r2, 2, 3) ==
          elem({{1, "1 2 3 1 2 3"}, {1, "1 2 1 3 2 3"}, {-2, "1 1 2 3 2 3"}}));
}

TEST_CASE("instantiate: type I and II shapes") {
    CHECK(instantiate_relator(RelatorType::I, W("1 2 1 2"), {}) == elem({{1, "1 2 1 2 3 3"}}));
    const ModuleElement sii = instantiate_relator(RelatorType::SII, GaussWord{}, {0});
    CHECK(sii == elem({{1, "1 2 2 1"}, {2, "1 1"}}));  // [ijji] + [ii] + [jj]
    const ModuleElement wii = instantiate_relator(RelatorType::WII, GaussWord{}, {0});
    CHECK(wii == elem({{1, "1 2 1 2"}, {2, "1 1"}}));
}

TEST_CASE("instantiate: bad cuts") {
    CHECK_THROWS_AS(instantiate_relator(RelatorType::SIII, W("1 1"), {2, 1}), BadCuts);
    CHECK_THROWS_AS(instantiate_relator(RelatorType::SIII, W("1 1"), {0, 3}), BadCuts);
    CHECK_THROWS_AS(instantiate_relator(RelatorType::SIII, W("1 1"), {0}), BadCuts);
    CHECK_THROWS_AS(instantiate_relator(RelatorType::I, W("1 1"), {1}), BadCuts);
}

TEST_CASE("project") {
    const ModuleElement e = elem({{1, "1 1"}, {2, "1 2 1 2"}});
    CHECK(project(e, 2, 3) == elem({{2, "1 2 1 2"}}));
    const ModuleElement inband = elem({{2, "1 2 1 2"}, {1, "1 1 2 2 3 3"}});
    CHECK(project(inband, 2, 3) == inband);
    CHECK_THROWS_AS(project(e, 1, 3), BadBand);
    CHECK_THROWS_AS(project(e, 3, 2), BadBand);
}

TEST_CASE("relator terms over an m-chord base have m+k-1 or m+k chords") {
    testsupport::Rng rng(37);
    for (RelatorType t : {RelatorType::I, RelatorType::SII, RelatorType::WII, RelatorType::SIII,
                          RelatorType::WIII}) {
        const int k = inserted_letters(t);
        for (int rep = 0; rep < 20; ++rep) {
            const int m = static_cast<int>(rng.next(4));
            const GaussWord base = rng.word(m);
            std::vector<int> cuts;
            for (int c = 0; c < block_count(t) - 1; ++c)
                cuts.push_back(static_cast<int>(rng.next(2 * m + 1)));
            std::sort(cuts.begin(), cuts.end());
            const ModuleElement r = instantiate_relator(t, base, cuts);
            for (const auto& [x, coeff] : r.terms()) {
                const bool ok = x.chords() == m + k - 1 || x.chords() == m + k;
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("relator set (2,3) strong III: the three known elements") {
    const RelatorSet rs = relator_set({RelatorType::SIII}, 2, 3);
    CHECK(as_set(rs) == normalized_set({
        elem({{1, "1 2 3 1 2 3"}, {3, "1 2 1 2"}, {-3, "1 1 2 2"}, {-1, "1 1 2 2 3 3"}}),
        elem({{3, "1 1 2 3 2 3"}, {-2, "1 1 2 3 3 2"}, {-1, "1 1 2 2 3 3"}}),
        elem({{1, "1 2 3 1 2 3"}, {1, "1 2 1 3 2 3"}, {-2, "1 1 2 3 2 3"}}),
    }));
}

TEST_CASE("relator set (2,3) weak III: the five known elements") {
    const RelatorSet rs = relator_set({RelatorType::WIII}, 2, 3);
    CHECK(as_set(rs) == normalized_set({
        elem({{1, "1 2 1 3 2 3"}, {1, "1 2 1 2"}, {-1, "1 1 2 2"}, {-1, "1 1 2 3 2 3"}}),
        elem({{1, "1 2 3 1 2 3"}, {-1, "1 2 1 3 2 3"}}),
        elem({{3, "1 2 1 3 2 3"}, {-1, "1 2 3 1 2 3"}, {-2, "1 1 2 3 2 3"}}),
        elem({{1, "1 1 2 3 2 3"}, {-2, "1 1 2 3 3 2"}, {1, "1 1 2 2 3 3"}}),
        elem({{1, "1 1 2 3 2 3"}, {-1, "1 1 2 2 3 3"}}),
    }));
}

TEST_CASE("relator set sizes at (2,3) for the remaining types") {
    CHECK(relator_set({RelatorType::I}, 2, 3).elements.size() == 4);
    CHECK(relator_set({RelatorType::SII}, 2, 3).elements.size() == 8);
    CHECK(relator_set({RelatorType::WII}, 2, 3).elements.size() == 8);
    // type I: every band diagram with an isolated chord, coefficient 1
    const RelatorSet ri = relator_set({RelatorType::I}, 2, 3);
    CHECK(as_set(ri) == normalized_set({
        elem({{1, "1 1 2 2"}}),
        elem({{1, "1 1 2 2 3 3"}}),
        elem({{1, "1 1 2 3 2 3"}}),
        elem({{1, "1 1 2 3 3 2"}}),
    }));
}

TEST_CASE("relator set (2,4) strong III: full projection") {
    const RelatorSet rs = relator_set({RelatorType::SIII}, 2, 4);
    CHECK(rs.elements.size() == 15);
}

TEST_CASE("widening the base window adds nothing (saturation)") {
    for (auto [b, d] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
        const auto plain = as_set(relator_set({RelatorType::SIII}, b, d));
        const auto wide = as_set(relator_set({RelatorType::SIII}, b, d, kDefaultEnumerationCap,
                                             kDefaultRelatorBaseCap, 2));
        CHECK(plain == wide);
    }
    const auto plain2 = as_set(relator_set({RelatorType::SII}, 2, 3));
    const auto wide2 = as_set(relator_set({RelatorType::SII}, 2, 3, kDefaultEnumerationCap,
                                          kDefaultRelatorBaseCap, 2));
    CHECK(plain2 == wide2);
}

TEST_CASE("projection commutes with tilde on band diagrams") {
    // for every diagram x in the band and any relator r: x~(r) = x~(O_{b,d}(r))
    testsupport::Rng rng(41);
    const DiagramIndex idx = enumerate_diagrams(4);
    for (int rep = 0; rep < 40; ++rep) {
        const int m = static_cast<int>(rng.next(3));
        const GaussWord base = rng.word(m);
        std::vector<int> cuts{static_cast<int>(rng.next(2 * m + 1)),
                              static_cast<int>(rng.next(2 * m + 1))};
        std::sort(cuts.begin(), cuts.end());
        const ModuleElement r = instantiate_relator(RelatorType::SIII, base, cuts);
        const ModuleElement pr = project(r, 2, 4);
        for (const IndexedDiagram& e : band(idx, 2, 4))
            CHECK(tilde_eval(e.diagram, r) == tilde_eval(e.diagram, pr));
    }
}

TEST_CASE("union of types is the union of the sets") {
    const auto both = as_set(relator_set({RelatorType::SIII, RelatorType::WIII}, 2, 3));
    auto s = as_set(relator_set({RelatorType::SIII}, 2, 3));
    const auto w = as_set(relator_set({RelatorType::WIII}, 2, 3));
    s.insert(w.begin(), w.end());
    CHECK(both == s);
}

TEST_CASE("relator set: errors") {
    CHECK_THROWS_AS(relator_set({RelatorType::SIII}, 1, 3), BadBand);
    CHECK_THROWS_AS(relator_set({RelatorType::SIII}, 3, 2), BadBand);
    CHECK_THROWS_AS(relator_set({RelatorType::SIII}, 2, 7), CapExceeded);
}
