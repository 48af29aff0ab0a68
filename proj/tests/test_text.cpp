#include "doctest.h"

#include <sstream>

#include "brute.hpp"
#include "eds/generate.hpp"
#include "eds/text.hpp"
#include "golden.hpp"

using namespace eds;

TEST_CASE("parse splits seeds and symbols") {
    const EdsText t = parse_eds(golden::kIntroText);
    REQUIRE(t.seed_count() == 3);
    CHECK(t.seeds() == std::vector<std::string>{"bc", "ca", "bb"});
    REQUIRE(t.symbol_count() == 2);
    CHECK(t.symbols()[0].alternatives == std::vector<std::string>{"ab", "aab", "aca"});
    CHECK(t.symbols()[1].alternatives == std::vector<std::string>{"abcab", "cba"});
}

TEST_CASE("parse handles the symbol-free text") {
    const EdsText t = parse_eds("abc");
    CHECK(t.seed_count() == 1);
    CHECK(t.symbol_count() == 0);
    CHECK(t.seeds()[0] == "abc");
}

TEST_CASE("adjacent symbols imply an empty seed") {
    const EdsText t = parse_eds(golden::kText4);
    REQUIRE(t.seed_count() == 4);
    CHECK(t.seeds()[1] == "");
    CHECK(t.seeds() == std::vector<std::string>{"ab", "", "cca", "ca"});
}

TEST_CASE("leading and trailing symbols imply empty boundary seeds") {
    const EdsText t = parse_eds("{a,b}x{c,d}");
    REQUIRE(t.seed_count() == 3);
    CHECK(t.seeds()[0] == "");
    CHECK(t.seeds()[1] == "x");
    CHECK(t.seeds()[2] == "");
}

TEST_CASE("parse ignores whitespace") {
    const EdsText t = parse_eds("a b{c,\nd}e\r\nf");
    CHECK(t == parse_eds("ab{c,d}ef"));
}

TEST_CASE("empty alternatives are kept") {
    const EdsText t = parse_eds("a{b,}c");
    REQUIRE(t.symbol_count() == 1);
    CHECK(t.symbols()[0].alternatives == std::vector<std::string>{"b", ""});
    CHECK(t.symbols()[0].min_length() == 0);
    CHECK(t.symbols()[0].max_length() == 1);
}

TEST_CASE("parse errors carry the offending offset") {
    CHECK_THROWS_WITH_AS(parse_eds("a{b"), "unclosed '{' at offset 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_eds("ab}c"), "'}' without a matching '{' at offset 2", ParseError);
    CHECK_THROWS_WITH_AS(parse_eds("a,b"), "',' outside a symbol at offset 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_eds("a{b{c}}"), "nested '{' at offset 3", ParseError);
    CHECK_THROWS_WITH_AS(parse_eds("a{}b"), "symbol with zero alternatives at offset 1", ParseError);
    CHECK_THROWS_AS(parse_eds("a\x01z"), ParseError);
    try {
        parse_eds("abc\x7f");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("a lone empty alternative is rejected at construction") {
    CHECK_THROWS_AS(EdsText({"a", "b"}, {DegenerateSymbol{{""}}}), std::invalid_argument);
    CHECK_NOTHROW(EdsText({"a", "b"}, {DegenerateSymbol{{"", "x"}}}));
}

TEST_CASE("serialize examples") {
    CHECK(serialize_eds(EdsText({"abc"}, {})) == "abc");
    CHECK(serialize_eds(parse_eds(golden::kText1)) == golden::kText1);
    CHECK(serialize_eds(EdsText({"a", "c"}, {DegenerateSymbol{{"b", ""}}})) == "a{b,}c");
}

TEST_CASE("round trip over random texts") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorParams params;
        params.seed_count = {1, 5};
        params.seed_length = {0, 6};
        params.alternative_count = {1, 4};
        params.alternative_length = {0, 5};
        params.alphabet_size = 1 + seed % 4;
        params.empty_probability = 0.2;
        const EdsText t = generate_random(params, seed);
        CHECK(parse_eds(serialize_eds(t)) == t);
    }
}

TEST_CASE("stats of the worked examples") {
    const TextStats st1 = stats(parse_eds(golden::kText1));
    CHECK(st1.n == 11);
    CHECK(st1.N == 27);
    CHECK(st1.k == 3);
    CHECK(st1.alpha == 3);
    CHECK(st1.alternatives_total == 5);

    const TextStats plain = stats(parse_eds("abc"));
    CHECK(plain.n == 3);
    CHECK(plain.N == 3);
    CHECK(plain.k == 1);
    CHECK(plain.alpha == 0);

    // seeds 10+2+7+3, symbols (1+3+4) + (1+8+3) + (1+4+3+6), summed by hand
    const TextStats st3 = stats(parse_eds(golden::kText3));
    CHECK(st3.n == 25);
    CHECK(st3.N == 56);
    CHECK(st3.k == 4);
    CHECK(st3.alpha == 4);
}

TEST_CASE("stats match a naive recount on random texts") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorParams params;
        params.seed_count = {1, 6};
        params.seed_length = {0, 7};
        params.alternative_count = {1, 5};
        params.alternative_length = {0, 6};
        params.empty_probability = 0.1;
        const EdsText t = generate_random(params, seed * 31 + 7);
        std::size_t n = t.seed_count() - 1, N = 0;
        for (const auto& s : t.seeds()) {
            n += s.size();
            N += s.size();
        }
        for (const auto& sym : t.symbols())
            for (const auto& a : sym.alternatives) N += a.size();
        CHECK(stats(t).n == n);
        CHECK(stats(t).N == N);
        CHECK(t.length() == n);
        CHECK(t.total_size() == N);
    }
}

TEST_CASE("position info over the first worked example") {
    const EdsText t = parse_eds(golden::kText1);
    CHECK(t.position_info(1) == PositionInfo{1, PositionKind::Solid, 1, 1});
    // abbc occupies 1..4, so the first symbol sits at 5 and the second at 9
    CHECK(t.position_info(4) == PositionInfo{4, PositionKind::Solid, 1, 4});
    CHECK(t.position_info(5) == PositionInfo{5, PositionKind::Degenerate, 1, 0});
    CHECK(t.position_info(9) == PositionInfo{9, PositionKind::Degenerate, 2, 0});
    CHECK(t.position_info(11) == PositionInfo{11, PositionKind::Solid, 3, 2});
    CHECK_THROWS_AS(t.position_info(0), std::out_of_range);
    CHECK_THROWS_AS(t.position_info(12), std::out_of_range);
}

TEST_CASE("position info is a bijection onto seeds letters and symbols") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorParams params;
        params.seed_count = {1, 5};
        params.seed_length = {0, 5};
        params.alternative_count = {1, 3};
        params.alternative_length = {0, 4};
        params.empty_probability = 0.15;
        const EdsText t = generate_random(params, seed ^ 0xabcdef);

        std::size_t solid_seen = 0, degenerate_seen = 0;
        std::size_t expect_solid = 0;
        for (const auto& s : t.seeds()) expect_solid += s.size();
        for (std::size_t p = 1; p <= t.length(); ++p) {
            const PositionInfo info = t.position_info(p);
            CHECK(info.position == p);
            if (info.kind == PositionKind::Solid) {
                ++solid_seen;
                CHECK(t.seed_start(info.segment_index - 1) + info.local_offset - 1 == p);
                CHECK(info.local_offset >= 1);
                CHECK(info.local_offset <= t.seeds()[info.segment_index - 1].size());
            } else {
                ++degenerate_seen;
                CHECK(t.symbol_position(info.segment_index - 1) == p);
            }
        }
        CHECK(solid_seen == expect_solid);
        CHECK(degenerate_seen == t.symbol_count());
    }
}

TEST_CASE("symbols spanned counts degenerate positions inside a range") {
    const EdsText t = parse_eds(golden::kText3);
    CHECK(t.symbols_spanned(3, 8) == 0);
    CHECK(t.symbols_spanned(10, 15) == 2);
    CHECK(t.symbols_spanned(14, 14) == 1);
    CHECK(t.symbols_spanned(22, 24) == 1);
    CHECK(t.symbols_spanned(1, 25) == 3);
}

TEST_CASE("parse of empty input yields the empty single-seed text") {
    const EdsText t = parse_eds("");
    CHECK(t.seed_count() == 1);
    CHECK(t.length() == 0);
    CHECK(serialize_eds(t) == "");
}

TEST_CASE("stream parse matches string parse") {
    std::istringstream in(golden::kText3);
    CHECK(parse_eds(in) == parse_eds(golden::kText3));
}
