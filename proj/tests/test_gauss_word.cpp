#include <catch2/catch_amalgamated.hpp>

#include "testsupport.hpp"

using namespace chordlab;
using testsupport::W;

TEST_CASE("parse: whitespace-separated integers") {
    CHECK(W("1 2 1 2").letters() == std::vector<Letter>{1, 2, 1, 2});
    CHECK(W("  7 3   7 3 ").letters() == std::vector<Letter>{7, 3, 7, 3});
}

TEST_CASE("parse: compact letter runs relabel by first occurrence") {
    CHECK(W("abab").letters() == std::vector<Letter>{1, 2, 1, 2});
    CHECK(W("baab").letters() == std::vector<Letter>{1, 2, 2, 1});
}

TEST_CASE("parse: empty word spellings") {
    CHECK(W("").empty());
    CHECK(W("-").empty());
    CHECK(W("  ").empty());
    CHECK(W("-").chords() == 0);
}

TEST_CASE("parse: error cases") {
    CHECK_THROWS_AS(W("1 2 1"), NotDoubleOccurrence);
    CHECK_THROWS_AS(W("1 1 1 1"), NotDoubleOccurrence);
    CHECK_THROWS_AS(W("1 x 1 x"), BadToken);
    CHECK_THROWS_AS(W("0 1 0 1"), BadToken);
    CHECK_THROWS_AS(W("aBaB"), BadToken);
}

TEST_CASE("to_string prints single-spaced letters, '-' for empty") {
    CHECK(to_string(W("1 2 1 2")) == "1 2 1 2");
    CHECK(to_string(GaussWord{}) == "-");
    // round trip
    testsupport::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const GaussWord w = rng.word_up_to(8);
        CHECK(parse_gauss_word(to_string(w)) == w);
    }
}

TEST_CASE("concat shifts the second word's letters") {
    CHECK(concat(W("1 2 1 2"), W("1 2 1 2")) == W("1 2 1 2 3 4 3 4"));
    CHECK(concat(GaussWord{}, W("1 2 1 2")) == W("1 2 1 2"));
    CHECK(concat(W("1 1"), W("1 1")) == W("1 1 2 2"));
    CHECK(concat(W("2 2"), GaussWord{}) == W("1 1"));
}

TEST_CASE("rotation and reversal preserve validity and chord count") {
    testsupport::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        const GaussWord w = rng.word_up_to(7);
        const int t = w.empty() ? 0 : static_cast<int>(rng.next(w.size()));
        CHECK(rotated(w, t).chords() == w.chords());
        CHECK(reversed(w).chords() == w.chords());
        CHECK_NOTHROW(GaussWord(rotated(w, t).letters()));
        CHECK_NOTHROW(GaussWord(reversed(w).letters()));
    }
}

TEST_CASE("relabeled applies a bijection") {
    CHECK(relabeled(W("1 2 1 2"), {{1, 9}, {2, 4}}) == W("9 4 9 4"));
}
