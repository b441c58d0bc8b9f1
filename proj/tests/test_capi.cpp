#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "rtab.h"

namespace {

std::vector<int32_t> word(const std::string& digits) {
    std::vector<int32_t> out;
    for (char c : digits) out.push_back(c - '0');
    return out;
}

std::string take(char* s) {
    std::string out(s);
    rt_free_str(s);
    return out;
}

}

TEST_CASE("status names") {
    CHECK(std::string(rt_status_name(RT_OK)) == "Ok");
    CHECK(std::string(rt_status_name(RT_NOT_LATTICE_WORD)) == "NotLatticeWord");
    CHECK(std::string(rt_status_name(RT_NOT_RICHARDSON)) == "NotRichardson");
    CHECK(std::string(rt_status_name(RT_SIZE_LIMIT_EXCEEDED)) == "SizeLimitExceeded");
    CHECK(std::string(rt_status_name(RT_ELEMENT_OUT_OF_RANGE)) == "ElementOutOfRange");
    CHECK(std::string(rt_status_name(RT_INTERNAL)) == "Internal");
}

TEST_CASE("parse and format round trips") {
    int32_t* buf = nullptr;
    size_t len = 0;
    REQUIRE(rt_parse_word("12113123", &buf, &len) == RT_OK);
    REQUIRE(len == 8);
    CHECK(buf[0] == 1);
    CHECK(buf[7] == 3);
    char* text = nullptr;
    REQUIRE(rt_format_word(buf, len, &text) == RT_OK);
    CHECK(take(text) == "12113123");
    rt_free_i32(buf);

    auto bad = word("122");
    rt_veclist* rows = nullptr;
    CHECK(rt_tableau_rows(bad.data(), bad.size(), &rows) == RT_NOT_LATTICE_WORD);
    CHECK(std::string(rt_last_detail()).size() > 0);
    int flag = 0;
    REQUIRE(rt_is_lattice_word(bad.data(), bad.size(), &flag) == RT_OK);
    CHECK(flag == 0);

    REQUIRE(rt_parse_partition("4,2,2", &buf, &len) == RT_OK);
    REQUIRE(len == 3);
    CHECK(buf[0] == 4);
    rt_free_i32(buf);
    CHECK(rt_parse_partition("2,4", &buf, &len) == RT_INVALID_ARGUMENT);

    REQUIRE(rt_parse_perm("75182364", &buf, &len) == RT_OK);
    REQUIRE(len == 8);
    CHECK(buf[2] == 1);
    REQUIRE(rt_format_perm(buf, len, &text) == RT_OK);
    CHECK(take(text) == "75182364");
    rt_free_i32(buf);
    CHECK(rt_parse_perm("1123", &buf, &len) == RT_INVALID_ARGUMENT);
}

TEST_CASE("recognition surface") {
    auto w = word("12113123");
    int flag = 0;
    REQUIRE(rt_is_lattice_word(w.data(), w.size(), &flag) == RT_OK);
    CHECK(flag == 1);
    REQUIRE(rt_is_richardson(w.data(), w.size(), &flag) == RT_OK);
    CHECK(flag == 1);

    int32_t verdicts[7];
    REQUIRE(rt_richardson_check(w.data(), w.size(), verdicts) == RT_OK);
    for (int i = 0; i < 7; ++i) CHECK(verdicts[i] == 1);

    auto bad = word("1122");
    REQUIRE(rt_richardson_check(bad.data(), bad.size(), verdicts) == RT_OK);
    for (int i = 0; i < 7; ++i) CHECK(verdicts[i] == 0);

    int32_t* parts = nullptr;
    size_t nparts = 0;
    REQUIRE(rt_word_shape(w.data(), w.size(), &parts, &nparts) == RT_OK);
    REQUIRE(nparts == 3);
    CHECK(parts[0] == 4);
    CHECK(parts[1] == 2);
    CHECK(parts[2] == 2);
    rt_free_i32(parts);

    rt_veclist* rows = nullptr;
    REQUIRE(rt_tableau_rows(w.data(), w.size(), &rows) == RT_OK);
    REQUIRE(rt_veclist_count(rows) == 3);
    const int32_t* row = nullptr;
    REQUIRE(rt_veclist_at(rows, 0, &row) == 4);
    CHECK(row[0] == 1);
    CHECK(row[3] == 6);
    rt_veclist_free(rows);
}

TEST_CASE("evacuation trace") {
    auto w = word("12113123");
    rt_trace* trace = nullptr;
    REQUIRE(rt_evacuate(w.data(), w.size(), &trace) == RT_OK);
    const int32_t* result = nullptr;
    REQUIRE(rt_trace_result(trace, &result) == 8);
    char* text = nullptr;
    REQUIRE(rt_format_word(result, 8, &text) == RT_OK);
    CHECK(take(text) == "12312113");
    CHECK(rt_trace_path_count(trace) == 8);
    const int32_t* cells = nullptr;
    size_t cell_count = rt_trace_path(trace, 0, &cells);
    CHECK(cell_count >= 1);
    CHECK(cells[0] == 1);
    CHECK(cells[1] == 1);
    CHECK(rt_trace_path_is_l(trace, 0) >= 0);
    rt_trace_free(trace);
}

TEST_CASE("prime surface") {
    auto w = word("12113123");
    rt_veclist* factors = nullptr;
    REQUIRE(rt_prime_decomposition(w.data(), w.size(), &factors) == RT_OK);
    REQUIRE(rt_veclist_count(factors) == 2);
    const int32_t* f = nullptr;
    CHECK(rt_veclist_at(factors, 0, &f) == 5);
    CHECK(rt_veclist_at(factors, 1, &f) == 3);
    rt_veclist_free(factors);

    auto p = word("1213124");
    int32_t* out = nullptr;
    size_t out_len = 0;
    REQUIRE(rt_psi(p.data(), p.size(), &out, &out_len) == RT_OK);
    char* text = nullptr;
    REQUIRE(rt_format_word(out, out_len, &text) == RT_OK);
    CHECK(take(text) == "11212");
    rt_free_i32(out);

    auto q = word("11212");
    REQUIRE(rt_psi_inverse(q.data(), q.size(), 4, &out, &out_len) == RT_OK);
    REQUIRE(rt_format_word(out, out_len, &text) == RT_OK);
    CHECK(take(text) == "1213124");
    rt_free_i32(out);

    auto composite = word("11");
    CHECK(rt_psi(composite.data(), composite.size(), &out, &out_len) == RT_NOT_PRIME);

    auto s = word("112");
    int32_t target[3] = {3, 2, 1};
    rt_veclist* exts = nullptr;
    REQUIRE(rt_extensions(s.data(), s.size(), target, 3, &exts) == RT_OK);
    CHECK(rt_veclist_count(exts) == 4);
    rt_veclist_free(exts);
}

TEST_CASE("enumeration surface") {
    int32_t parts[3] = {4, 2, 2};
    char* text = nullptr;
    REQUIRE(rt_count_richardson(parts, 3, &text) == RT_OK);
    CHECK(take(text) == "15");
    REQUIRE(rt_motzkin(4, &text) == RT_OK);
    CHECK(take(text) == "9");
    REQUIRE(rt_involutions(6, &text) == RT_OK);
    CHECK(take(text) == "76");
    REQUIRE(rt_proportion(6, &text) == RT_OK);
    CHECK(take(text) == "51/76");

    int32_t staircase[3] = {3, 2, 1};
    rt_qpoly* poly = nullptr;
    REQUIRE(rt_q_count_richardson(staircase, 3, &poly) == RT_OK);
    REQUIRE(rt_qpoly_terms(poly) == 5);
    CHECK(rt_qpoly_exponent(poly, 0) == 7);
    REQUIRE(rt_qpoly_coefficient(poly, 1, &text) == RT_OK);
    CHECK(take(text) == "2");
    REQUIRE(rt_qpoly_format(poly, &text) == RT_OK);
    CHECK(take(text) == "q^7 + 2*q^8 + 2*q^9 + 2*q^10 + q^11");
    rt_qpoly_free(poly);

    rt_refine* refine = nullptr;
    REQUIRE(rt_motzkin_refinement(8, 0, &refine) == RT_OK);
    CHECK(rt_refine_rows(refine) == 22);
    REQUIRE(rt_refine_total(refine, &text) == RT_OK);
    CHECK(take(text) == "323");
    REQUIRE(rt_refine_motzkin(refine, &text) == RT_OK);
    CHECK(take(text) == "323");
    CHECK(rt_refine_ok(refine) == 1);
    const int32_t* shape = nullptr;
    CHECK(rt_refine_shape(refine, 0, &shape) >= 1);
    REQUIRE(rt_refine_count(refine, 0, &text) == RT_OK);
    CHECK(take(text).size() >= 1);
    rt_refine_free(refine);
    CHECK(rt_motzkin_refinement(25, 0, &refine) == RT_SIZE_LIMIT_EXCEEDED);

    int32_t alpha[3] = {3, 2, 1};
    REQUIRE(rt_gf_coefficient(3, alpha, 3, &text) == RT_OK);
    CHECK(take(text) == "8");
}

TEST_CASE("symmetric group surface") {
    int32_t v[5] = {1, 5, 3, 4, 2};
    int32_t w[5] = {2, 5, 3, 4, 1};
    int flag = 0;
    REQUIRE(rt_bruhat_leq(v, w, 5, &flag) == RT_OK);
    CHECK(flag == 1);
    int64_t len = 0;
    REQUIRE(rt_perm_length(w, 5, &len) == RT_OK);
    CHECK(len == 6);

    int32_t parts[2] = {3, 2};
    int32_t* rep = nullptr;
    size_t rep_len = 0;
    REQUIRE(rt_min_coset_rep(w, 5, parts, 2, &rep, &rep_len) == RT_OK);
    REQUIRE(rep_len == 5);
    char* text = nullptr;
    REQUIRE(rt_format_perm(rep, rep_len, &text) == RT_OK);
    CHECK(take(text) == "14253");
    REQUIRE(rt_is_min_coset(rep, rep_len, parts, 2, &flag) == RT_OK);
    CHECK(flag == 1);
    rt_free_i32(rep);
}

TEST_CASE("cell surface") {
    auto word_sigma = word("12113123");
    int32_t* v = nullptr;
    int32_t* w = nullptr;
    size_t v_len = 0;
    size_t w_len = 0;
    int64_t gap = 0;
    int64_t target = 0;
    REQUIRE(rt_envelope(word_sigma.data(), word_sigma.size(), &v, &v_len, &w,
                        &w_len, &gap, &target) == RT_OK);
    char* text = nullptr;
    REQUIRE(rt_format_perm(v, v_len, &text) == RT_OK);
    CHECK(take(text) == "15726348");
    REQUIRE(rt_format_perm(w, w_len, &text) == RT_OK);
    CHECK(take(text) == "75182364");
    CHECK(gap == 6);
    CHECK(target == 6);

    int32_t* code = nullptr;
    size_t code_len = 0;
    REQUIRE(rt_lehmer_w(word_sigma.data(), word_sigma.size(), &code, &code_len) == RT_OK);
    REQUIRE(code_len == 8);
    CHECK(code[0] == 6);
    CHECK(code[1] == 4);
    rt_free_i32(code);

    int32_t lambda[3] = {4, 2, 2};
    int flag = 0;
    REQUIRE(rt_in_fiber_cell_set(v, w, 8, lambda, 3, &flag) == RT_OK);
    CHECK(flag == 1);
    rt_free_i32(v);
    rt_free_i32(w);

    int32_t square[2] = {2, 2};
    int32_t cv[4] = {1, 3, 2, 4};
    int32_t cw[4] = {3, 1, 4, 2};
    REQUIRE(rt_in_fiber_cell_set(cv, cw, 4, square, 2, &flag) == RT_OK);
    CHECK(flag == 1);
    REQUIRE(rt_in_fiber_cell_set(cv, cw, 4, lambda, 3, &flag) == RT_SIZE_MISMATCH);

    rt_cells* cells = nullptr;
    REQUIRE(rt_enumerate_cells(square, 2, 0, &cells) == RT_OK);
    CHECK(rt_cells_count(cells) == 13);
    const int32_t* img = nullptr;
    CHECK(rt_cells_v(cells, 12, &img) == 4);
    CHECK(img[0] == 1);
    CHECK(rt_cells_w(cells, 12, &img) == 4);
    CHECK(img[0] == 3);
    CHECK(rt_cells_dim(cells, 12) == 2);
    rt_cells_free(cells);

    REQUIRE(rt_top_cells(square, 2, 0, &cells) == RT_OK);
    CHECK(rt_cells_count(cells) == 1);
    rt_cells_free(cells);
}

TEST_CASE("smoothness surface") {
    int32_t v[8] = {1, 5, 7, 2, 6, 3, 4, 8};
    int32_t w[8] = {7, 5, 1, 8, 2, 3, 6, 4};
    rt_pairs* pairs = nullptr;
    REQUIRE(rt_deodhar_set(v, w, 8, &pairs) == RT_OK);
    REQUIRE(rt_pairs_count(pairs) == 6);
    int32_t a = 0;
    int32_t b = 0;
    rt_pairs_at(pairs, 0, &a, &b);
    CHECK(a == 1);
    CHECK(b == 2);
    rt_pairs_at(pairs, 5, &a, &b);
    CHECK(a == 7);
    CHECK(b == 8);
    rt_pairs_free(pairs);

    int flag = 0;
    REQUIRE(rt_richardson_smooth(v, w, 8, &flag) == RT_OK);
    CHECK(flag == 1);
    REQUIRE(rt_schubert_smooth_at(w, v, 8, &flag) == RT_OK);
    CHECK(flag == 1);

    auto word_sigma = word("12113123");
    REQUIRE(rt_reflection_pairs(word_sigma.data(), word_sigma.size(), 0, &pairs) == RT_OK);
    CHECK(rt_pairs_count(pairs) == 6);
    rt_pairs_at(pairs, 4, &a, &b);
    CHECK(a == 5);
    CHECK(b == 8);
    rt_pairs_free(pairs);
    REQUIRE(rt_reflection_pairs(word_sigma.data(), word_sigma.size(), 1, &pairs) == RT_OK);
    CHECK(rt_pairs_count(pairs) == 6);
    rt_pairs_at(pairs, 1, &a, &b);
    CHECK(a == 2);
    CHECK(b == 5);
    rt_pairs_free(pairs);

    int32_t identity4[4] = {1, 2, 3, 4};
    int32_t singular[4] = {3, 4, 1, 2};
    REQUIRE(rt_richardson_smooth(identity4, singular, 4, &flag) == RT_OK);
    CHECK(flag == 0);
    CHECK(rt_deodhar_set(singular, identity4, 4, &pairs) == RT_NOT_COMPARABLE);
}

TEST_CASE("hook and component surface") {
    auto hook = word("1231114");
    rt_veclist* expansion = nullptr;
    REQUIRE(rt_hook_expansion(hook.data(), hook.size(), &expansion) == RT_OK);
    REQUIRE(rt_veclist_count(expansion) == 4);
    const int32_t* u = nullptr;
    REQUIRE(rt_veclist_at(expansion, 0, &u) == 7);
    char* text = nullptr;
    REQUIRE(rt_format_perm(u, 7, &text) == RT_OK);
    CHECK(take(text) == "4765123");
    rt_veclist_free(expansion);

    auto flat = word("1212");
    CHECK(rt_hook_expansion(flat.data(), flat.size(), &expansion) == RT_NOT_HOOK_SHAPE);

    int32_t elems[4] = {3, 4, 6, 7};
    int32_t* out = nullptr;
    size_t out_len = 0;
    REQUIRE(rt_k_component(elems, 4, 7, 0, &out, &out_len) == RT_OK);
    REQUIRE(rt_format_word(out, out_len, &text) == RT_OK);
    CHECK(take(text) == "1211312");
    rt_free_i32(out);
    REQUIRE(rt_k_component(elems, 4, 7, 1, &out, &out_len) == RT_OK);
    REQUIRE(rt_format_word(out, out_len, &text) == RT_OK);
    CHECK(take(text) == "1212113");
    rt_free_i32(out);

    auto column_word = word("123121234123");
    int flag = 0;
    REQUIRE(rt_is_column_component(column_word.data(), column_word.size(), &flag) == RT_OK);
    CHECK(flag == 1);
}

TEST_CASE("selftest surface") {
    int passed = 0;
    int failed = 0;
    char* report = nullptr;
    REQUIRE(rt_selftest(5, &passed, &failed, &report) == RT_OK);
    CHECK(passed > 0);
    CHECK(failed == 0);
    std::string text = take(report);
    CHECK(text.find("ok") != std::string::npos);
}
