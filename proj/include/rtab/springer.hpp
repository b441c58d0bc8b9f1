#pragma once

#include <utility>
#include <vector>

#include "rtab/partition.hpp"
#include "rtab/permutation.hpp"
#include "rtab/tableau.hpp"

namespace rtab {

// Totally nonnegative Springer fiber cell, indexed by a pair of minimal coset
// representatives v <= w with dim = length(w) - length(v).
struct CellIndex {
    Permutation v;
    Permutation w;
    long long dim;

    bool operator==(const CellIndex&) const = default;
};

// w_sigma: conjugate by w0 of the inverse of the bottom-to-top reading word.
Permutation reading_w(const StandardTableau& t);

// v_sigma: inverse of the top-down reading word of the evacuation of t.
Permutation reading_v(const StandardTableau& t);

// Lehmer code of reading_w computed directly from the tableau:
// code[n-j] = #{i < j : row(i) < row(j)}.
std::vector<int> lehmer_w_direct(const StandardTableau& t);

long long length_gap(const StandardTableau& t);

// Richardson iff the length gap attains n(lambda).
bool is_richardson_gap(const StandardTableau& t);

// Richardson iff s_j v_sigma is not below w_sigma for every j outside the
// partial sums of the shape.
bool is_richardson_bruhat(const StandardTableau& t);

CellIndex richardson_envelope(const StandardTableau& t);

// Membership in the cell poset Z_lambda: both permutations minimal coset
// representatives, v <= w, and s_j v not below w for j outside the partial
// sums. SizeMismatch when sizes disagree with the partition.
bool in_Z(const Permutation& v, const Permutation& w, const Partition& lambda);

// All cells, sorted by (dim, v, w). SizeLimitExceeded past the bound.
std::vector<CellIndex> enumerate_cells(const Partition& lambda, int bound = 7);

// Cells of maximal dimension n(lambda).
std::vector<CellIndex> top_cells(const Partition& lambda, int bound = 7);

// Transpositions t_{i,j} with v < v t_{i,j} <= w, as position pairs (i, j).
// NotComparable unless v <= w.
std::vector<std::pair<int, int>> deodhar_set(const Permutation& v, const Permutation& w);

// Deodhar criterion: the Schubert variety X_w is smooth at the flag of v
// exactly when the set above has size length(w) - length(v).
bool schubert_smooth_at(const Permutation& w, const Permutation& v);

// Smoothness of the open Richardson variety closure R_{v,w}: Deodhar at both
// ends, i.e. X_w at v and X_{w0 v} at w0 w.
bool richardson_smooth(const Permutation& v, const Permutation& w);

enum class ReflectionMode { evac, plain };

// Pairs (i, j), i < j, read from the evacuation of t (evac) or from t itself
// (plain): i lies in a row strictly above j and is the largest of 1..j in its
// row. NotRichardson unless t is Richardson.
std::vector<std::pair<int, int>> reflection_pairs_tableau(const StandardTableau& t,
                                                          ReflectionMode mode);

// The coordinate flag of w lies in the Springer fiber of type lambda exactly
// when w is a minimal coset representative.
bool permutation_flag_in_fiber(const Permutation& w, const Partition& lambda);

// True when every prime factor is a single column 1 2 ... m. NotRichardson
// unless t is Richardson.
bool is_pr_richardson_component(const StandardTableau& t);

} // namespace rtab
