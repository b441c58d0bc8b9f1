#include "rtab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "rtab/bigint.hpp"
#include "rtab/enumeration.hpp"
#include "rtab/error.hpp"
#include "rtab/evacuation.hpp"
#include "rtab/guemes.hpp"
#include "rtab/kcomponent.hpp"
#include "rtab/partition.hpp"
#include "rtab/permutation.hpp"
#include "rtab/qpolynomial.hpp"
#include "rtab/richardson.hpp"
#include "rtab/selftest.hpp"
#include "rtab/springer.hpp"
#include "rtab/tableau.hpp"

using namespace rtab;

struct rt_veclist {
    std::vector<std::vector<int32_t>> items;
};

struct rt_trace {
    std::vector<int32_t> result;
    std::vector<std::vector<int32_t>> paths;
    std::vector<int> is_l;
};

struct rt_qpoly {
    std::vector<std::pair<int64_t, bigint>> terms;
};

struct rt_refine {
    RefinementResult r;
    std::vector<std::vector<int32_t>> shapes;
};

struct rt_cells {
    std::vector<std::vector<int32_t>> vs;
    std::vector<std::vector<int32_t>> ws;
    std::vector<int64_t> dims;
};

struct rt_pairs {
    std::vector<std::pair<int32_t, int32_t>> pairs;
};

namespace {

thread_local std::string g_detail;

rt_status map_errc(errc c) {
    switch (c) {
    case errc::not_lattice_word: return RT_NOT_LATTICE_WORD;
    case errc::index_out_of_range: return RT_INDEX_OUT_OF_RANGE;
    case errc::not_richardson: return RT_NOT_RICHARDSON;
    case errc::not_prime: return RT_NOT_PRIME;
    case errc::largest_letter_too_small: return RT_LARGEST_LETTER_TOO_SMALL;
    case errc::letter_mismatch: return RT_LETTER_MISMATCH;
    case errc::size_limit_exceeded: return RT_SIZE_LIMIT_EXCEEDED;
    case errc::invalid_code: return RT_INVALID_CODE;
    case errc::size_mismatch: return RT_SIZE_MISMATCH;
    case errc::not_comparable: return RT_NOT_COMPARABLE;
    case errc::not_hook_shape: return RT_NOT_HOOK_SHAPE;
    case errc::entry_out_of_range: return RT_ENTRY_OUT_OF_RANGE;
    case errc::element_out_of_range: return RT_ELEMENT_OUT_OF_RANGE;
    case errc::empty_word: return RT_EMPTY_WORD;
    case errc::invalid_argument: return RT_INVALID_ARGUMENT;
    case errc::internal: return RT_INTERNAL;
    }
    return RT_INTERNAL;
}

template <class F>
rt_status guard(F&& f) {
    try {
        f();
        g_detail.clear();
        return RT_OK;
    } catch (const error& e) {
        g_detail = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_detail = e.what();
        return RT_INTERNAL;
    }
}

std::vector<int> to_vec(const int32_t* data, size_t n) {
    if (n > 0 && data == nullptr) fail(errc::invalid_argument, "null array");
    return std::vector<int>(data, data + n);
}

std::vector<int32_t> to_i32(const std::vector<int>& v) {
    return std::vector<int32_t>(v.begin(), v.end());
}

int32_t* copy_i32(const std::vector<int>& v) {
    auto* p = static_cast<int32_t*>(std::malloc(sizeof(int32_t) * (v.size() + 1)));
    if (!p) throw std::bad_alloc();
    for (size_t i = 0; i < v.size(); i++) p[i] = static_cast<int32_t>(v[i]);
    return p;
}

char* copy_str(const std::string& s) {
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

Partition to_partition(const int32_t* parts, size_t nparts) {
    return make_partition(to_vec(parts, nparts));
}

Permutation to_perm(const int32_t* img, size_t n) {
    return make_permutation(to_vec(img, n));
}

StandardTableau to_tableau(const int32_t* word, size_t n) {
    return tableau_from_word(to_vec(word, n));
}

rt_veclist* make_veclist(const std::vector<std::vector<int>>& items) {
    auto* h = new rt_veclist;
    h->items.reserve(items.size());
    for (const auto& v : items) h->items.push_back(to_i32(v));
    return h;
}

std::string bigint_str(const bigint& v) { return v.str(); }

rt_cells* pack_cells(const std::vector<CellIndex>& cells) {
    auto* h = new rt_cells;
    for (const auto& c : cells) {
        h->vs.push_back(to_i32(c.v.img));
        h->ws.push_back(to_i32(c.w.img));
        h->dims.push_back(c.dim);
    }
    return h;
}

rt_pairs* pack_pairs(const std::vector<std::pair<int, int>>& pairs) {
    auto* h = new rt_pairs;
    for (auto [a, b] : pairs) h->pairs.emplace_back(a, b);
    return h;
}

} // namespace

extern "C" {

const char* rt_status_name(rt_status s) {
    switch (s) {
    case RT_OK: return "Ok";
    case RT_NOT_LATTICE_WORD: return "NotLatticeWord";
    case RT_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case RT_NOT_RICHARDSON: return "NotRichardson";
    case RT_NOT_PRIME: return "NotPrime";
    case RT_LARGEST_LETTER_TOO_SMALL: return "LargestLetterTooSmall";
    case RT_LETTER_MISMATCH: return "LetterMismatch";
    case RT_SIZE_LIMIT_EXCEEDED: return "SizeLimitExceeded";
    case RT_INVALID_CODE: return "InvalidCode";
    case RT_SIZE_MISMATCH: return "SizeMismatch";
    case RT_NOT_COMPARABLE: return "NotComparable";
    case RT_NOT_HOOK_SHAPE: return "NotHookShape";
    case RT_ENTRY_OUT_OF_RANGE: return "EntryOutOfRange";
    case RT_ELEMENT_OUT_OF_RANGE: return "ElementOutOfRange";
    case RT_EMPTY_WORD: return "EmptyWord";
    case RT_INVALID_ARGUMENT: return "InvalidArgument";
    case RT_INTERNAL: return "Internal";
    }
    return "Internal";
}

const char* rt_last_detail(void) { return g_detail.c_str(); }

void rt_free_i32(int32_t* p) { std::free(p); }
void rt_free_str(char* p) { std::free(p); }

rt_status rt_parse_word(const char* text, int32_t** out, size_t* out_len) {
    return guard([&] {
        if (!text) fail(errc::invalid_argument, "null text");
        auto w = parse_word(text);
        *out = copy_i32(w);
        *out_len = w.size();
    });
}

rt_status rt_parse_partition(const char* text, int32_t** out, size_t* out_len) {
    return guard([&] {
        if (!text) fail(errc::invalid_argument, "null text");
        auto p = parse_partition(text);
        *out = copy_i32(p.parts);
        *out_len = p.parts.size();
    });
}

rt_status rt_parse_perm(const char* text, int32_t** out, size_t* out_len) {
    return guard([&] {
        if (!text) fail(errc::invalid_argument, "null text");
        auto w = parse_permutation(text);
        *out = copy_i32(w.img);
        *out_len = w.img.size();
    });
}

rt_status rt_format_word(const int32_t* word, size_t n, char** out) {
    return guard([&] { *out = copy_str(format_word(to_vec(word, n))); });
}

rt_status rt_format_partition(const int32_t* parts, size_t k, char** out) {
    return guard([&] { *out = copy_str(format_partition(to_partition(parts, k))); });
}

rt_status rt_format_perm(const int32_t* img, size_t n, char** out) {
    return guard([&] { *out = copy_str(format_permutation(to_perm(img, n))); });
}

size_t rt_veclist_count(const rt_veclist* h) { return h->items.size(); }

size_t rt_veclist_at(const rt_veclist* h, size_t i, const int32_t** data) {
    if (i >= h->items.size()) {
        *data = nullptr;
        return 0;
    }
    *data = h->items[i].data();
    return h->items[i].size();
}

void rt_veclist_free(rt_veclist* h) { delete h; }

rt_status rt_is_lattice_word(const int32_t* word, size_t n, int* out) {
    return guard([&] { *out = is_lattice_word(to_vec(word, n)) ? 1 : 0; });
}

rt_status rt_word_shape(const int32_t* word, size_t n, int32_t** parts, size_t* nparts) {
    return guard([&] {
        auto p = shape(to_tableau(word, n));
        *parts = copy_i32(p.parts);
        *nparts = p.parts.size();
    });
}

rt_status rt_tableau_rows(const int32_t* word, size_t n, rt_veclist** out) {
    return guard([&] { *out = make_veclist(tableau_rows(to_tableau(word, n))); });
}

rt_status rt_is_richardson(const int32_t* word, size_t n, int* out) {
    return guard([&] { *out = is_richardson_def(to_tableau(word, n)) ? 1 : 0; });
}

rt_status rt_richardson_check(const int32_t* word, size_t n, int32_t out[7]) {
    return guard([&] {
        auto t = to_tableau(word, n);
        out[0] = is_richardson_def(t) ? 1 : 0;
        out[1] = is_richardson_word(t.word) ? 1 : 0;
        out[2] = is_richardson_crop(t) ? 1 : 0;
        out[3] = all_slides_L(t) ? 1 : 0;
        out[4] = is_richardson_word(evacuate(t).result.word) ? 1 : 0;
        out[5] = is_richardson_gap(t) ? 1 : 0;
        out[6] = is_richardson_bruhat(t) ? 1 : 0;
    });
}

rt_status rt_evacuate(const int32_t* word, size_t n, rt_trace** out) {
    return guard([&] {
        auto trace = evacuate(to_tableau(word, n));
        auto* h = new rt_trace;
        h->result = to_i32(trace.result.word);
        for (const auto& path : trace.paths) {
            std::vector<int32_t> flat;
            flat.reserve(path.cells.size() * 2);
            for (auto [r, c] : path.cells) {
                flat.push_back(r);
                flat.push_back(c);
            }
            h->paths.push_back(std::move(flat));
            h->is_l.push_back(is_L_slide(path) ? 1 : 0);
        }
        *out = h;
    });
}

size_t rt_trace_result(const rt_trace* h, const int32_t** word) {
    *word = h->result.data();
    return h->result.size();
}

size_t rt_trace_path_count(const rt_trace* h) { return h->paths.size(); }

size_t rt_trace_path(const rt_trace* h, size_t i, const int32_t** cells) {
    if (i >= h->paths.size()) {
        *cells = nullptr;
        return 0;
    }
    *cells = h->paths[i].data();
    return h->paths[i].size() / 2;
}

int rt_trace_path_is_l(const rt_trace* h, size_t i) {
    return i < h->is_l.size() ? h->is_l[i] : 0;
}

void rt_trace_free(rt_trace* h) { delete h; }

rt_status rt_is_prime(const int32_t* word, size_t n, int* out) {
    return guard([&] { *out = is_prime_word(to_vec(word, n)) ? 1 : 0; });
}

rt_status rt_prime_decomposition(const int32_t* word, size_t n, rt_veclist** out) {
    return guard([&] { *out = make_veclist(prime_decomposition_word(to_vec(word, n))); });
}

rt_status rt_psi(const int32_t* word, size_t n, int32_t** out, size_t* out_len) {
    return guard([&] {
        auto q = psi(to_vec(word, n));
        *out = copy_i32(q);
        *out_len = q.size();
    });
}

rt_status rt_psi_inverse(const int32_t* word, size_t n, int32_t ell,
                         int32_t** out, size_t* out_len) {
    return guard([&] {
        auto r = psi_inverse(to_vec(word, n), ell);
        *out = copy_i32(r);
        *out_len = r.size();
    });
}

rt_status rt_extensions(const int32_t* word, size_t n, const int32_t* parts,
                        size_t nparts, rt_veclist** out) {
    return guard([&] {
        *out = make_veclist(richardson_extensions(to_vec(word, n),
                                                  to_partition(parts, nparts)));
    });
}

rt_status rt_count_richardson(const int32_t* parts, size_t nparts, char** out) {
    return guard([&] {
        *out = copy_str(bigint_str(count_richardson(to_partition(parts, nparts))));
    });
}

rt_status rt_motzkin(int32_t n, char** out) {
    return guard([&] { *out = copy_str(bigint_str(motzkin(n))); });
}

rt_status rt_involutions(int32_t n, char** out) {
    return guard([&] { *out = copy_str(bigint_str(involutions(n))); });
}

rt_status rt_proportion(int32_t n, char** out) {
    return guard([&] {
        bigrat r = richardson_proportion(n);
        *out = copy_str(bigint_str(numerator(r)) + "/" + bigint_str(denominator(r)));
    });
}

rt_status rt_q_count_richardson(const int32_t* parts, size_t nparts, rt_qpoly** out) {
    return guard([&] {
        auto p = q_count_richardson(to_partition(parts, nparts));
        auto* h = new rt_qpoly;
        for (const auto& [e, c] : p.coeffs) h->terms.emplace_back(e, c);
        *out = h;
    });
}

size_t rt_qpoly_terms(const rt_qpoly* h) { return h->terms.size(); }

int64_t rt_qpoly_exponent(const rt_qpoly* h, size_t i) {
    return i < h->terms.size() ? h->terms[i].first : -1;
}

rt_status rt_qpoly_coefficient(const rt_qpoly* h, size_t i, char** out) {
    return guard([&] {
        if (i >= h->terms.size()) fail(errc::index_out_of_range, "term index");
        *out = copy_str(bigint_str(h->terms[i].second));
    });
}

rt_status rt_qpoly_format(const rt_qpoly* h, char** out) {
    return guard([&] {
        QPolynomial p;
        for (const auto& [e, c] : h->terms) p.coeffs[e] = c;
        *out = copy_str(format_qpoly(p));
    });
}

void rt_qpoly_free(rt_qpoly* h) { delete h; }

rt_status rt_motzkin_refinement(int32_t n, int32_t bound, rt_refine** out) {
    return guard([&] {
        auto* h = new rt_refine;
        h->r = motzkin_refinement_check(n, bound > 0 ? bound : 20);
        for (const auto& row : h->r.rows) h->shapes.push_back(to_i32(row.shape.parts));
        *out = h;
    });
}

size_t rt_refine_rows(const rt_refine* h) { return h->r.rows.size(); }

size_t rt_refine_shape(const rt_refine* h, size_t i, const int32_t** parts) {
    if (i >= h->shapes.size()) {
        *parts = nullptr;
        return 0;
    }
    *parts = h->shapes[i].data();
    return h->shapes[i].size();
}

rt_status rt_refine_count(const rt_refine* h, size_t i, char** out) {
    return guard([&] {
        if (i >= h->r.rows.size()) fail(errc::index_out_of_range, "row index");
        *out = copy_str(bigint_str(h->r.rows[i].count));
    });
}

rt_status rt_refine_total(const rt_refine* h, char** out) {
    return guard([&] { *out = copy_str(bigint_str(h->r.total)); });
}

rt_status rt_refine_motzkin(const rt_refine* h, char** out) {
    return guard([&] { *out = copy_str(bigint_str(h->r.motzkin_value)); });
}

int rt_refine_ok(const rt_refine* h) { return h->r.ok ? 1 : 0; }

void rt_refine_free(rt_refine* h) { delete h; }

rt_status rt_gf_coefficient(int32_t ell, const int32_t* alpha, size_t alen, char** out) {
    return guard([&] {
        *out = copy_str(bigint_str(gf_coefficient(ell, to_vec(alpha, alen))));
    });
}

rt_status rt_bruhat_leq(const int32_t* v, const int32_t* w, size_t n, int* out) {
    return guard([&] { *out = bruhat_leq(to_perm(v, n), to_perm(w, n)) ? 1 : 0; });
}

rt_status rt_perm_length(const int32_t* w, size_t n, int64_t* out) {
    return guard([&] { *out = perm_length(to_perm(w, n)); });
}

rt_status rt_min_coset_rep(const int32_t* w, size_t n, const int32_t* parts,
                           size_t nparts, int32_t** out, size_t* out_len) {
    return guard([&] {
        auto rep = min_coset_rep(to_perm(w, n), to_partition(parts, nparts));
        *out = copy_i32(rep.img);
        *out_len = rep.img.size();
    });
}

rt_status rt_is_min_coset(const int32_t* w, size_t n, const int32_t* parts,
                          size_t nparts, int* out) {
    return guard([&] {
        *out = is_min_coset(to_perm(w, n), to_partition(parts, nparts)) ? 1 : 0;
    });
}

rt_status rt_envelope(const int32_t* word, size_t n,
                      int32_t** v, size_t* v_len,
                      int32_t** w, size_t* w_len,
                      int64_t* gap, int64_t* target) {
    return guard([&] {
        auto t = to_tableau(word, n);
        auto cell = richardson_envelope(t);
        *v = copy_i32(cell.v.img);
        *v_len = cell.v.img.size();
        *w = copy_i32(cell.w.img);
        *w_len = cell.w.img.size();
        *gap = cell.dim;
        *target = n_lambda(shape(t));
    });
}

rt_status rt_lehmer_w(const int32_t* word, size_t n, int32_t** out, size_t* out_len) {
    return guard([&] {
        auto code = lehmer_w_direct(to_tableau(word, n));
        *out = copy_i32(code);
        *out_len = code.size();
    });
}

rt_status rt_in_fiber_cell_set(const int32_t* v, const int32_t* w, size_t n,
                               const int32_t* parts, size_t nparts, int* out) {
    return guard([&] {
        *out = in_Z(to_perm(v, n), to_perm(w, n), to_partition(parts, nparts)) ? 1 : 0;
    });
}

rt_status rt_enumerate_cells(const int32_t* parts, size_t nparts, int32_t bound,
                             rt_cells** out) {
    return guard([&] {
        *out = pack_cells(enumerate_cells(to_partition(parts, nparts),
                                          bound > 0 ? bound : 7));
    });
}

rt_status rt_top_cells(const int32_t* parts, size_t nparts, int32_t bound,
                       rt_cells** out) {
    return guard([&] {
        *out = pack_cells(top_cells(to_partition(parts, nparts), bound > 0 ? bound : 7));
    });
}

size_t rt_cells_count(const rt_cells* h) { return h->dims.size(); }

size_t rt_cells_v(const rt_cells* h, size_t i, const int32_t** img) {
    if (i >= h->vs.size()) {
        *img = nullptr;
        return 0;
    }
    *img = h->vs[i].data();
    return h->vs[i].size();
}

size_t rt_cells_w(const rt_cells* h, size_t i, const int32_t** img) {
    if (i >= h->ws.size()) {
        *img = nullptr;
        return 0;
    }
    *img = h->ws[i].data();
    return h->ws[i].size();
}

int64_t rt_cells_dim(const rt_cells* h, size_t i) {
    return i < h->dims.size() ? h->dims[i] : -1;
}

void rt_cells_free(rt_cells* h) { delete h; }

size_t rt_pairs_count(const rt_pairs* h) { return h->pairs.size(); }

void rt_pairs_at(const rt_pairs* h, size_t i, int32_t* a, int32_t* b) {
    if (i >= h->pairs.size()) {
        *a = 0;
        *b = 0;
        return;
    }
    *a = h->pairs[i].first;
    *b = h->pairs[i].second;
}

void rt_pairs_free(rt_pairs* h) { delete h; }

rt_status rt_deodhar_set(const int32_t* v, const int32_t* w, size_t n, rt_pairs** out) {
    return guard([&] { *out = pack_pairs(deodhar_set(to_perm(v, n), to_perm(w, n))); });
}

rt_status rt_schubert_smooth_at(const int32_t* w, const int32_t* v, size_t n, int* out) {
    return guard([&] {
        *out = schubert_smooth_at(to_perm(w, n), to_perm(v, n)) ? 1 : 0;
    });
}

rt_status rt_richardson_smooth(const int32_t* v, const int32_t* w, size_t n, int* out) {
    return guard([&] {
        *out = richardson_smooth(to_perm(v, n), to_perm(w, n)) ? 1 : 0;
    });
}

rt_status rt_reflection_pairs(const int32_t* word, size_t n, int mode, rt_pairs** out) {
    return guard([&] {
        auto m = mode == 0 ? ReflectionMode::evac : ReflectionMode::plain;
        *out = pack_pairs(reflection_pairs_tableau(to_tableau(word, n), m));
    });
}

rt_status rt_hook_expansion(const int32_t* word, size_t n, rt_veclist** out) {
    return guard([&] {
        auto perms = hook_expansion(to_tableau(word, n));
        std::vector<std::vector<int>> items;
        items.reserve(perms.size());
        for (const auto& u : perms) items.push_back(u.img);
        *out = make_veclist(items);
    });
}

rt_status rt_k_component(const int32_t* elems, size_t nelems, int32_t n,
                         int dual, int32_t** word, size_t* word_len) {
    return guard([&] {
        auto subset = to_vec(elems, nelems);
        auto t = dual ? k_component_dual(subset, n) : k_component_tableau(subset, n);
        *word = copy_i32(t.word);
        *word_len = t.word.size();
    });
}

rt_status rt_is_column_component(const int32_t* word, size_t n, int* out) {
    return guard([&] {
        *out = is_pr_richardson_component(to_tableau(word, n)) ? 1 : 0;
    });
}

rt_status rt_selftest(int32_t max_n, int* passed, int* failed, char** report) {
    return guard([&] {
        auto result = selftest(max_n > 0 ? max_n : 8);
        *passed = result.passed;
        *failed = result.failed;
        *report = copy_str(result.report);
    });
}

} // extern "C"
