#include <doctest.h>

#include "zigzag/tables.hpp"

using namespace zigzag;

TEST_CASE("word strings round-trip") {
    for (const char* s : {"A,C'^-1,B,A',C^-1,B'", "A,B'^-1", "B,C',C,A'", "A,A'"}) {
        CHECK(word_to_string(word_from_string(s)) == s);
    }
    CHECK_THROWS(word_from_string("D,A'"));
    CHECK_THROWS(word_from_string("A^2"));
}

TEST_CASE("word equivalence is blind to rotation and reversal") {
    const auto w = word_from_string("A,C'^-1,B,A',C^-1,B'");
    CHECK(words_equivalent({w}, {word_from_string("B,A',C^-1,B',A,C'^-1")}));
    // reversal: reversed order, every letter inverted
    CHECK(words_equivalent({w}, {word_from_string("B'^-1,C,A'^-1,B^-1,C',A^-1")}));
    CHECK(!words_equivalent({w}, {word_from_string("A,C',B,A',C^-1,B'")}));
    CHECK(!words_equivalent({w}, {word_from_string("A,C'^-1,B,A',C^-1,B'"),
                                  word_from_string("A,A'")}));
}

TEST_CASE("flippable letters widen the equivalence") {
    const auto expected = word_from_string("A,C'^-1,C^-1,A',B,B'");
    const auto flipped = word_from_string("A,C',C^-1,A',B,B'");
    CHECK(!words_equivalent({expected}, {flipped}));
    CHECK(words_equivalent({expected}, {flipped}, {WordLetter{true, 2, false}}));
}

TEST_CASE("the catalog carries fifty rows from the numbered tables") {
    int core = 0, extra = 0;
    for (const auto& t : case_tables())
        for (const auto& r : t.rows) {
            (t.core ? core : extra) += 1;
            for (const auto& w : r.words) CHECK(!word_from_string(w).empty());
        }
    CHECK(core == 50);
    CHECK(extra == 4);
}

TEST_CASE("every identification row replays on the corpus instances") {
    const auto corpus = build_corpus();
    const auto rows = reproduce_tables(corpus);
    CHECK(rows.size() == 54);
    for (const auto& r : rows) {
        INFO("table ", r.table, " {", r.identification, "} expected ", r.expected, " got ",
             r.actual);
        CHECK(r.match);
    }
}
