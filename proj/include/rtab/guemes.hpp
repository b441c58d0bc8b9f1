#pragma once

#include <vector>

#include "rtab/permutation.hpp"
#include "rtab/tableau.hpp"

namespace rtab {

// Filling of the staircase (m-1, m-2, ..., 1) with strictly increasing rows
// and columns and weakly increasing southwest-to-northeast diagonals
// (entry(i, j) <= entry(i-1, j+1)). rows[i-1][j-1] is the entry in row i,
// column j. m = rows.size() + 1.
struct GuemesTableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const GuemesTableau&) const = default;
};

// Validates shape and monotonicity.
GuemesTableau make_guemes(std::vector<std::vector<int>> rows);

int guemes_m(const GuemesTableau& t);

// Product over columns j = 1..m of the simple reflections of column j read
// bottom to top, as a permutation of [n]. EntryOutOfRange unless every entry
// lies in [n-1].
Permutation x_tau(const GuemesTableau& t, int n);

// Reduced iff length(x_tau) equals the staircase size m(m-1)/2.
bool is_reduced(const GuemesTableau& t, int n);

// Güemes tableaux of shape (m-1, ..., 1) whose first row is the fixed one,
// in row-major lexicographic order of the fillings.
std::vector<GuemesTableau> guemes_fillings(int m, const std::vector<int>& first_row, int n);

// Schubert expansion of a hook-shape component: w0 x_tau over the reduced
// Güemes tableaux with first row pinned by reading_w, sorted. NotHookShape
// unless the shape is (k, 1, ..., 1).
std::vector<Permutation> hook_expansion(const StandardTableau& t);

} // namespace rtab
