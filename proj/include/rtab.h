#pragma once

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returns rt_status; out-parameters are written
 * only on RT_OK. rt_status_name gives the stable textual name. */
typedef enum rt_status {
  RT_OK = 0,
  RT_NOT_LATTICE_WORD,
  RT_INDEX_OUT_OF_RANGE,
  RT_NOT_RICHARDSON,
  RT_NOT_PRIME,
  RT_LARGEST_LETTER_TOO_SMALL,
  RT_LETTER_MISMATCH,
  RT_SIZE_LIMIT_EXCEEDED,
  RT_INVALID_CODE,
  RT_SIZE_MISMATCH,
  RT_NOT_COMPARABLE,
  RT_NOT_HOOK_SHAPE,
  RT_ENTRY_OUT_OF_RANGE,
  RT_ELEMENT_OUT_OF_RANGE,
  RT_EMPTY_WORD,
  RT_INVALID_ARGUMENT,
  RT_INTERNAL
} rt_status;

const char* rt_status_name(rt_status s);

/* Detail text for the most recent failing call on this thread ("" if none).
 * Valid until the next failing call. */
const char* rt_last_detail(void);

/* Deallocators for malloc'd out-parameters. */
void rt_free_i32(int32_t* p);
void rt_free_str(char* p);

/* Parsing and formatting. Words and partitions accept digit strings when all
 * entries are single digits, else comma-separated; permutations likewise in
 * one-line notation. Formatted strings are malloc'd. */
rt_status rt_parse_word(const char* text, int32_t** out, size_t* out_len);
rt_status rt_parse_partition(const char* text, int32_t** out, size_t* out_len);
rt_status rt_parse_perm(const char* text, int32_t** out, size_t* out_len);
rt_status rt_format_word(const int32_t* word, size_t n, char** out);
rt_status rt_format_partition(const int32_t* parts, size_t k, char** out);
rt_status rt_format_perm(const int32_t* img, size_t n, char** out);

/* List-of-vectors handle (prime factors, tableau rows, word lists, ...). */
typedef struct rt_veclist rt_veclist;
size_t rt_veclist_count(const rt_veclist* h);
/* Returns the length of entry i; *data points into the handle. */
size_t rt_veclist_at(const rt_veclist* h, size_t i, const int32_t** data);
void rt_veclist_free(rt_veclist* h);

/* Tableaux and recognition. */
rt_status rt_is_lattice_word(const int32_t* word, size_t n, int* out);
rt_status rt_word_shape(const int32_t* word, size_t n, int32_t** parts, size_t* nparts);
rt_status rt_tableau_rows(const int32_t* word, size_t n, rt_veclist** out);
rt_status rt_is_richardson(const int32_t* word, size_t n, int* out);
/* Seven verdicts, in order: definition, word, crop, lslide, evacuation,
 * gap, bruhat. */
rt_status rt_richardson_check(const int32_t* word, size_t n, int32_t out[7]);

/* Evacuation with slide paths. Path cells are (row, column) pairs,
 * 1-indexed, flattened. */
typedef struct rt_trace rt_trace;
rt_status rt_evacuate(const int32_t* word, size_t n, rt_trace** out);
size_t rt_trace_result(const rt_trace* h, const int32_t** word);
size_t rt_trace_path_count(const rt_trace* h);
size_t rt_trace_path(const rt_trace* h, size_t i, const int32_t** cells);
int rt_trace_path_is_l(const rt_trace* h, size_t i);
void rt_trace_free(rt_trace* h);

/* Prime structure. */
rt_status rt_is_prime(const int32_t* word, size_t n, int* out);
rt_status rt_prime_decomposition(const int32_t* word, size_t n, rt_veclist** out);
rt_status rt_psi(const int32_t* word, size_t n, int32_t** out, size_t* out_len);
rt_status rt_psi_inverse(const int32_t* word, size_t n, int32_t ell,
                         int32_t** out, size_t* out_len);
rt_status rt_extensions(const int32_t* word, size_t n, const int32_t* parts,
                        size_t nparts, rt_veclist** out);

/* Enumeration. Counts are decimal strings. */
rt_status rt_count_richardson(const int32_t* parts, size_t nparts, char** out);
rt_status rt_motzkin(int32_t n, char** out);
rt_status rt_involutions(int32_t n, char** out);
/* "numerator/denominator" in lowest terms. */
rt_status rt_proportion(int32_t n, char** out);

typedef struct rt_qpoly rt_qpoly;
rt_status rt_q_count_richardson(const int32_t* parts, size_t nparts, rt_qpoly** out);
size_t rt_qpoly_terms(const rt_qpoly* h);
int64_t rt_qpoly_exponent(const rt_qpoly* h, size_t i);
rt_status rt_qpoly_coefficient(const rt_qpoly* h, size_t i, char** out);
rt_status rt_qpoly_format(const rt_qpoly* h, char** out);
void rt_qpoly_free(rt_qpoly* h);

/* Shape-refined Motzkin cross-check. bound <= 0 means the default (20). */
typedef struct rt_refine rt_refine;
rt_status rt_motzkin_refinement(int32_t n, int32_t bound, rt_refine** out);
size_t rt_refine_rows(const rt_refine* h);
size_t rt_refine_shape(const rt_refine* h, size_t i, const int32_t** parts);
rt_status rt_refine_count(const rt_refine* h, size_t i, char** out);
rt_status rt_refine_total(const rt_refine* h, char** out);
rt_status rt_refine_motzkin(const rt_refine* h, char** out);
int rt_refine_ok(const rt_refine* h);
void rt_refine_free(rt_refine* h);

/* Generating-function coefficient: number of Richardson words with alpha[i]
 * copies of letter i+1, computed from the rational recurrence with ell
 * variables. */
rt_status rt_gf_coefficient(int32_t ell, const int32_t* alpha, size_t alen, char** out);

/* Symmetric group helpers. Permutations are one-line int32 arrays. */
rt_status rt_bruhat_leq(const int32_t* v, const int32_t* w, size_t n, int* out);
rt_status rt_perm_length(const int32_t* w, size_t n, int64_t* out);
rt_status rt_min_coset_rep(const int32_t* w, size_t n, const int32_t* parts,
                           size_t nparts, int32_t** out, size_t* out_len);
rt_status rt_is_min_coset(const int32_t* w, size_t n, const int32_t* parts,
                          size_t nparts, int* out);

/* Reading permutations and the associated cell data. */
rt_status rt_envelope(const int32_t* word, size_t n,
                      int32_t** v, size_t* v_len,
                      int32_t** w, size_t* w_len,
                      int64_t* gap, int64_t* target);
rt_status rt_lehmer_w(const int32_t* word, size_t n, int32_t** out, size_t* out_len);
rt_status rt_in_fiber_cell_set(const int32_t* v, const int32_t* w, size_t n,
                               const int32_t* parts, size_t nparts, int* out);

typedef struct rt_cells rt_cells;
/* bound <= 0 means the default (7). */
rt_status rt_enumerate_cells(const int32_t* parts, size_t nparts, int32_t bound,
                             rt_cells** out);
rt_status rt_top_cells(const int32_t* parts, size_t nparts, int32_t bound,
                       rt_cells** out);
size_t rt_cells_count(const rt_cells* h);
size_t rt_cells_v(const rt_cells* h, size_t i, const int32_t** img);
size_t rt_cells_w(const rt_cells* h, size_t i, const int32_t** img);
int64_t rt_cells_dim(const rt_cells* h, size_t i);
void rt_cells_free(rt_cells* h);

/* Deodhar smoothness. Pairs are (i, j) with i < j, 1-indexed. */
typedef struct rt_pairs rt_pairs;
size_t rt_pairs_count(const rt_pairs* h);
void rt_pairs_at(const rt_pairs* h, size_t i, int32_t* a, int32_t* b);
void rt_pairs_free(rt_pairs* h);
rt_status rt_deodhar_set(const int32_t* v, const int32_t* w, size_t n, rt_pairs** out);
rt_status rt_schubert_smooth_at(const int32_t* w, const int32_t* v, size_t n, int* out);
rt_status rt_richardson_smooth(const int32_t* v, const int32_t* w, size_t n, int* out);
/* mode 0: pairs read off the evacuation; mode 1: pairs read off the tableau. */
rt_status rt_reflection_pairs(const int32_t* word, size_t n, int mode, rt_pairs** out);

/* Hook-shape expansion: one permutation per reduced strict filling, sorted,
 * duplicates kept. */
rt_status rt_hook_expansion(const int32_t* word, size_t n, rt_veclist** out);

/* Two-coloring component tableau; elems lists the black subset of 1..n.
 * dual nonzero returns the dual tableau instead. */
rt_status rt_k_component(const int32_t* elems, size_t nelems, int32_t n,
                         int dual, int32_t** word, size_t* word_len);

rt_status rt_is_column_component(const int32_t* word, size_t n, int* out);

/* Full invariant suite; report is malloc'd, one line per check.
 * max_n <= 0 means the default (8). */
rt_status rt_selftest(int32_t max_n, int* passed, int* failed, char** report);

#ifdef __cplusplus
}
#endif
