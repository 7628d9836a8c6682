#include "crossfree/io.hpp"

#include "crossfree/construct.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace crossfree;
using testing::fano;

TEST_CASE("plain format round-trips the full bundle") {
    auto res = construct_cross_free_sts(1);
    Bundle bundle{res.ts, res.partition, lemma_gn_coloring(res.ts, res.partition),
                  Provenance{1, res.used_fallback}};
    auto text = write_plain(bundle);
    auto back = read_plain(text);
    CHECK(back.ts == bundle.ts);
    REQUIRE(back.partition.has_value());
    CHECK(back.partition->parts == bundle.partition->parts);
    REQUIRE(back.coloring.has_value());
    CHECK(*back.coloring == *bundle.coloring);
    REQUIRE(back.provenance.has_value());
    CHECK(back.provenance->k == 1);
    CHECK_FALSE(back.provenance->used_fallback);
    // write-read-write is the identity on bytes
    CHECK(write_plain(back) == text);
}

TEST_CASE("plain format header and line errors carry line numbers") {
    CHECK_THROWS_AS(read_plain(""), ParseError);
    CHECK_THROWS_AS(read_plain("m 7\n0 1 2\n"), ParseError);
    try {
        read_plain("n 7\n0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(read_plain("n 7\n0 1 3\nwhat 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_plain("n 7\n0 1 3\nX0: 0\nX1: 1\n"), ParseError);  // missing X2
}

TEST_CASE("plain format rejects bad blocks via the data model") {
    CHECK_THROWS_AS(read_plain("n 7\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(read_plain("n 7\n0 1 3\n0 1 3\n"), ParseError);  // duplicate
}

TEST_CASE("coloring file round-trip") {
    BlockColoring coloring{3, {0, 1, 2, 0, 1, 2, 0}};
    auto text = write_plain_coloring(coloring);
    CHECK(read_plain_coloring(text) == coloring);
    CHECK_THROWS_AS(read_plain_coloring("colors 3\n"), ParseError);
}

TEST_CASE("json format round-trips and rejects unknown versions") {
    auto res = construct_cross_free_sts(1);
    Bundle bundle{res.ts, res.partition, std::nullopt, Provenance{1, false}};
    auto text = write_json(bundle);
    auto back = read_json(text);
    CHECK(back.ts == bundle.ts);
    REQUIRE(back.partition.has_value());
    CHECK(back.partition->parts == bundle.partition->parts);
    REQUIRE(back.provenance.has_value());
    CHECK(back.provenance->k == 1);

    CHECK_THROWS_AS(read_json("{\"format\": \"sts-2\", \"n\": 7, \"blocks\": []}"), DesignError);
    CHECK_THROWS_AS(read_json("{\"n\": 7, \"blocks\": []}"), DesignError);
    CHECK_THROWS_AS(read_json("not json"), ParseError);
}

TEST_CASE("json carries colorings") {
    auto ts = fano();
    BlockColoring coloring{2, {0, 1, 0, 1, 0, 1, 0}};
    auto text = write_json(Bundle{ts, std::nullopt, coloring, std::nullopt});
    auto back = read_json(text);
    REQUIRE(back.coloring.has_value());
    CHECK(*back.coloring == coloring);
}

TEST_CASE("partition and coloring are checked against the system on read") {
    // partition mentions an out-of-range point
    CHECK_THROWS(read_plain("n 7\n0 1 3\nX0: 0\nX1: 1\nX2: 9\n"));
    // coloring longer than the block list
    CHECK_THROWS(read_plain("n 7\n0 1 3\ncolors r=2: 0 1 1\n"));
}
