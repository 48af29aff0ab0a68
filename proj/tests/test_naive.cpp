#include "doctest.h"

#include <algorithm>
#include <set>

#include "eds/naive.hpp"
#include "golden.hpp"

using namespace eds;

TEST_CASE("expansion of the first worked example") {
    const auto expanded = expand_possibility_set(parse_eds(golden::kText1));
    REQUIRE(expanded.size() == 6);
    std::set<std::string> strings;
    for (const auto& e : expanded) strings.insert(e.letters);
    CHECK(strings.count("abbcabccaaabcabbb") == 1);
    CHECK(strings.count("abbcaccaccacbabb") == 1);
    CHECK(strings.count("abbcabccacbabb") == 1);
}

TEST_CASE("expansion of trivial texts") {
    const auto single = expand_possibility_set(parse_eds("abc"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].letters == "abc");
    CHECK(single[0].coord_map == std::vector<std::size_t>{1, 2, 3});

    const auto pair = expand_possibility_set(parse_eds("a{b,c}d"));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].letters == "abd");
    CHECK(pair[1].letters == "acd");
    CHECK(pair[0].coord_map == std::vector<std::size_t>{1, 2, 3});
    CHECK(pair[1].coord_map == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("expansion count is the product of the alternative counts") {
    const EdsText t = parse_eds("x{a,b}y{c,d,e}{f,g}z");
    CHECK(expand_possibility_set(t).size() == 2 * 3 * 2);
}

TEST_CASE("coordinate maps are consistent with position info") {
    for (const auto& e : expand_possibility_set(parse_eds(golden::kText3))) {
        const EdsText t = parse_eds(golden::kText3);
        REQUIRE(e.letters.size() == e.coord_map.size());
        CHECK(std::is_sorted(e.coord_map.begin(), e.coord_map.end()));
        std::size_t prev = 0;
        for (std::size_t idx = 0; idx < e.coord_map.size(); ++idx) {
            const PositionInfo info = t.position_info(e.coord_map[idx]);
            if (info.kind == PositionKind::Solid) {
                CHECK(e.coord_map[idx] > prev);  // solid coordinates strictly increase
                CHECK(t.seeds()[info.segment_index - 1][info.local_offset - 1] == e.letters[idx]);
            }
            prev = e.coord_map[idx];
        }
    }
}

TEST_CASE("budget violations are reported with the computed size") {
    EdsText t = parse_eds("{a,b}{a,b}{a,b}{a,b}{a,b}");
    try {
        expand_possibility_set(t, ExpansionBudget{16, 1000000});
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.computed() == 32);
    }
    CHECK_THROWS_AS(expand_possibility_set(t, ExpansionBudget{10000, 10}), BudgetError);
}

TEST_CASE("naive occurrences of the worked examples") {
    CHECK(naive_occurrences(golden::kPattern3, parse_eds(golden::kText3)) == golden::kText3Occurrences);
    CHECK(naive_occurrences(golden::kPattern4, parse_eds(golden::kText4)) == golden::kText4Occurrences);
    CHECK(naive_occurrences("zz", parse_eds("ab{a,b}c")) == std::vector<Occurrence>{});
}

TEST_CASE("occurrences inside an alternative collapse to the symbol position") {
    const auto occ = naive_occurrences("bb", parse_eds("a{xbbx,c}a"));
    CHECK(occ == std::vector<Occurrence>{{2, 2}});
}
