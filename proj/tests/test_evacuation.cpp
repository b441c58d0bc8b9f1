#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtab/evacuation.hpp"
#include "rtab/springer.hpp"
#include "rtab/tableau.hpp"

using namespace rtab;

TEST_CASE("evacuation of a small tableau") {
    StandardTableau t = tableau_from_word(parse_word("12113123"));
    EvacuationTrace trace = evacuate(t);
    CHECK(format_word(trace.result.word) == "12312113");
    CHECK(format_rows(trace.result) == "(1,4,6,7),(2,5),(3,8)");
    CHECK(trace.paths.size() == 8);

    CHECK(evacuate(tableau_from_word({1})).result.word == std::vector<int>{1});
    CHECK(evacuate(StandardTableau{}).result.word.empty());
}

TEST_CASE("evacuation is an involution") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& t : all_syt_of_size(n))
            CHECK(evacuate(evacuate(t).result).result == t);
}

TEST_CASE("slide path of the first slide") {
    StandardTableau t = tableau_from_word(parse_word("1122134325341425"));
    EvacuationTrace trace = evacuate(t);
    CHECK(format_word(trace.result.word) == "1213121422354354");

    SlidePath expected{{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {4, 3}}};
    CHECK(trace.paths[0] == expected);
    CHECK_FALSE(is_L_slide(trace.paths[0]));
    CHECK(slide_row_columns(trace.paths[0]) == std::vector<int>{2, 2, 3, 3});
}

TEST_CASE("L-slide recognition") {
    CHECK(is_L_slide(SlidePath{{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}}}));
    CHECK(is_L_slide(SlidePath{{{1, 1}, {1, 2}, {1, 3}}}));
    CHECK(is_L_slide(SlidePath{{{1, 1}, {2, 1}}}));
    CHECK(is_L_slide(SlidePath{{{1, 1}}}));
    CHECK_FALSE(is_L_slide(SlidePath{{{1, 1}, {1, 2}, {2, 2}}}));

    CHECK(all_slides_L(tableau_from_word(parse_word("123123411213"))));
    CHECK_FALSE(all_slides_L(tableau_from_word(parse_word("1122"))));
    CHECK(all_slides_L(tableau_from_word(parse_word("1111"))));
}

TEST_CASE("first slide matches deleting the largest entry") {
    StandardTableau sigma = tableau_from_word(parse_word("1122134325341425"));
    StandardTableau dual = evacuate(sigma).result;

    auto [bar_dual, path] = first_slide(dual);
    SlidePath expected{{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {5, 2}}};
    CHECK(path == expected);
    CHECK(is_L_slide(path));
    CHECK(format_word(bar_dual.word) == "112121322344354");
    CHECK(bar_dual == evacuate(delete_largest(sigma)).result);

    for (const auto& t : all_syt_of_size(5)) {
        StandardTableau d = evacuate(t).result;
        CHECK(first_slide(d).first == evacuate(delete_largest(t)).result);
    }
}

TEST_CASE("slide statistics feeding the length recursion") {
    StandardTableau tau = tableau_from_word(parse_word("1122134325341425"));
    auto [rest, path] = first_slide(tau);
    CHECK(format_word(rest.word) == "121134225341325");
    CHECK(slide_row_columns(path) == std::vector<int>{2, 2, 3, 3});

    StandardTableau sigma = evacuate(tau).result;
    CHECK(perm_length(reading_v(sigma)) == 26);
    CHECK(perm_length(reading_v(delete_largest(sigma))) == 26);
}

TEST_CASE("evacuation of hook tableaux complements the word") {
    StandardTableau t = tableau_from_word(parse_word("1231114"));
    CHECK(format_word(evacuate(t).result.word) == "1211134");

    StandardTableau column = tableau_from_word(parse_word("1234"));
    CHECK(evacuate(column).result == column);
    StandardTableau row = tableau_from_word(parse_word("1111"));
    CHECK(evacuate(row).result == row);
}

TEST_CASE("evacuation anticommutes with concatenation") {
    StandardTableau a = tableau_from_word(parse_word("12113"));
    StandardTableau b = tableau_from_word(parse_word("123"));
    CHECK(evacuate(concat(a, b)).result ==
          concat(evacuate(b).result, evacuate(a).result));
}
