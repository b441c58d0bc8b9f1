#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "rtab/enumeration.hpp"
#include "rtab/error.hpp"
#include "rtab/partition.hpp"
#include "rtab/qpolynomial.hpp"
#include "rtab/tableau.hpp"

#include "oracles.hpp"

using namespace rtab;
using oracles::thrown_code;

TEST_CASE("partition construction and statistics") {
    Partition p = make_partition({4, 2, 2});
    CHECK(partition_size(p) == 8);
    CHECK(partition_length(p) == 3);
    CHECK(n_lambda(p) == 6);
    CHECK(partial_sums(p) == std::vector<int>{4, 6, 8});

    CHECK(n_lambda(make_partition({})) == 0);
    CHECK(n_lambda(make_partition({4, 4, 3, 3, 2})) == 27);
    CHECK(n_lambda(make_partition({5})) == 0);

    CHECK(parse_partition("4,2,2") == p);
    CHECK(format_partition(p) == "4,2,2");
    CHECK(format_partition(make_partition({})).empty());

    CHECK(thrown_code([] { make_partition({2, 3}); }) == errc::invalid_argument);
    CHECK(thrown_code([] { make_partition({3, 0}); }) == errc::invalid_argument);
    CHECK(thrown_code([] { parse_partition("2,x"); }) == errc::invalid_argument);

    CHECK(is_partition_vector({3, 3, 1}));
    CHECK_FALSE(is_partition_vector({1, 2}));
}

TEST_CASE("partitions of n in lexicographic order") {
    auto parts = partitions_of(5);
    std::vector<Partition> expected = {
        make_partition({5}),          make_partition({4, 1}),
        make_partition({3, 2}),       make_partition({3, 1, 1}),
        make_partition({2, 2, 1}),    make_partition({2, 1, 1, 1}),
        make_partition({1, 1, 1, 1, 1}),
    };
    CHECK(parts == expected);
    CHECK(partitions_of(0) == std::vector<Partition>{make_partition({})});
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("lattice words and tableau shape") {
    CHECK(is_lattice_word(parse_word("12113123")));
    CHECK(is_lattice_word({}));
    CHECK_FALSE(is_lattice_word(parse_word("211")));
    CHECK_FALSE(is_lattice_word(parse_word("122")));
    CHECK_FALSE(is_lattice_word(parse_word("13")));

    CHECK(thrown_code([] { tableau_from_word(parse_word("211")); }) ==
          errc::not_lattice_word);

    StandardTableau t = tableau_from_word(parse_word("12113123"));
    CHECK(shape(t) == make_partition({4, 2, 2}));
    CHECK(format_rows(t) == "(1,3,4,6),(2,7),(5,8)");
    CHECK(tableau_size(t) == 8);

    CHECK(parse_word("1,2,11") == std::vector<int>{1, 2, 11});
    CHECK(format_word({1, 2, 11}) == "1,2,11");
    CHECK(format_word(parse_word("1212")) == "1212");
}

TEST_CASE("restriction and deletion") {
    StandardTableau t = tableau_from_word(parse_word("11213213"));
    StandardTableau r = restrict_tableau(t, 5);
    CHECK(r.word == parse_word("11213"));
    CHECK(format_rows(r) == "(1,2,4),(3),(5)");
    CHECK(restrict_tableau(t, 8) == t);
    CHECK(restrict_tableau(t, 0).word.empty());
    CHECK(thrown_code([&] { restrict_tableau(t, 9); }) == errc::index_out_of_range);

    CHECK(delete_largest(t).word == parse_word("1121321"));
    CHECK(thrown_code([] { delete_largest(StandardTableau{}); }) ==
          errc::index_out_of_range);
}

TEST_CASE("concatenation") {
    StandardTableau a = tableau_from_word(parse_word("12113"));
    StandardTableau b = tableau_from_word(parse_word("123"));
    CHECK(concat(a, b).word == parse_word("12113123"));
    CHECK(concat(a, StandardTableau{}) == a);
    CHECK(concat(StandardTableau{}, b) == b);

    StandardTableau c = tableau_from_word(parse_word("123"));
    StandardTableau d = tableau_from_word(parse_word("1234"));
    StandardTableau e = tableau_from_word(parse_word("1"));
    StandardTableau f = tableau_from_word(parse_word("1213"));
    CHECK(concat(concat(concat(c, d), e), f).word == parse_word("123123411213"));
}

TEST_CASE("crop") {
    CHECK(crop_word(parse_word("12113123")) == parse_word("1212"));
    CHECK(crop_word(parse_word("111")).empty());
    CHECK(crop_word(crop_word(parse_word("112312"))) == parse_word("1"));
    CHECK(crop(tableau_from_word(parse_word("12113123"))).word == parse_word("1212"));
}

TEST_CASE("descents, maj, sumone") {
    StandardTableau t = tableau_from_word(parse_word("12113123"));
    CHECK(descents(t) == std::vector<int>{1, 4, 6, 7});
    CHECK(maj(t) == 18);
    CHECK(sumone(t.word) == 10);
    CHECK(sumone(parse_word("11212")) == 4);
    CHECK(sumone(std::vector<int>(6, 1)) == 15);

    StandardTableau row = tableau_from_word(parse_word("1111"));
    CHECK(descents(row).empty());
    CHECK(maj(row) == 0);

    StandardTableau col = tableau_from_word(parse_word("12345"));
    CHECK(descents(col) == std::vector<int>{1, 2, 3, 4});
    CHECK(maj(col) == 10);
}

TEST_CASE("tableau enumeration") {
    auto two_two = enumerate_syt(make_partition({2, 2}));
    REQUIRE(two_two.size() == 2);
    CHECK(two_two[0].word == parse_word("1122"));
    CHECK(two_two[1].word == parse_word("1212"));

    CHECK(enumerate_syt(make_partition({4, 2, 2})).size() == 56);
    CHECK(enumerate_syt(make_partition({6})).size() == 1);
    CHECK(all_syt_of_size(4).size() == 10);
    CHECK(all_syt_of_size(0).size() == 1);

    CHECK(thrown_code([] { enumerate_syt(make_partition({7, 6})); }) ==
          errc::size_limit_exceeded);
    CHECK(enumerate_syt(make_partition({7, 6}), 13).size() ==
          static_cast<size_t>(syt_count_hook(make_partition({7, 6})).convert_to<long long>()));
}

TEST_CASE("row insertion") {
    auto [p_id, q_id] = rs_insert(make_permutation({1, 2, 3}));
    CHECK(p_id.word == parse_word("111"));
    CHECK(q_id.word == parse_word("111"));

    auto [p_w0, q_w0] = rs_insert(make_permutation({4, 3, 2, 1}));
    CHECK(p_w0.word == parse_word("1234"));
    CHECK(q_w0.word == parse_word("1234"));

    auto [p, q] = rs_insert(parse_permutation("75182364"));
    CHECK(q.word == parse_word("12312113"));
    CHECK(shape(p) == shape(q));
}

TEST_CASE("q polynomials") {
    QPolynomial g = qbinomial(4, 2);
    CHECK(format_qpoly(g) == "1 + q + 2*q^2 + q^3 + q^4");
    CHECK(qpoly_eval_one(g) == 6);
    CHECK(qbinomial(3, 0) == qpoly_one());
    CHECK(qbinomial(3, 3) == qpoly_one());
    CHECK(qbinomial(3, 5) == qpoly_zero());

    QPolynomial one_plus_q = qpoly_add(qpoly_one(), qpoly_monomial(1));
    QPolynomial square = qpoly_mul(one_plus_q, one_plus_q);
    CHECK(format_qpoly(square) == "1 + 2*q + q^2");
    CHECK(format_qpoly(qpoly_zero()) == "0");
    CHECK(format_qpoly(qpoly_monomial(1)) == "q");
    CHECK(qpoly_eval_one(square) == 4);
}

TEST_CASE("error code names") {
    CHECK(std::string(errc_name(errc::not_lattice_word)) == "NotLatticeWord");
    CHECK(std::string(errc_name(errc::size_limit_exceeded)) == "SizeLimitExceeded");
    CHECK(std::string(errc_name(errc::largest_letter_too_small)) ==
          "LargestLetterTooSmall");
    CHECK(std::string(errc_name(errc::not_hook_shape)) == "NotHookShape");
}
