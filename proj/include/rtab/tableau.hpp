#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rtab/partition.hpp"
#include "rtab/permutation.hpp"

namespace rtab {

// Standard Young tableau, stored as its lattice word: word[j-1] is the row
// containing entry j. Construct through tableau_from_word to validate.
struct StandardTableau {
    std::vector<int> word;

    bool operator==(const StandardTableau&) const = default;
};

bool is_lattice_word(const std::vector<int>& w);
StandardTableau tableau_from_word(std::vector<int> w);

// Accepts a digit string "12113123" (letters <= 9) or comma-separated letters.
std::vector<int> parse_word(const std::string& text);
std::string format_word(const std::vector<int>& w);

int tableau_size(const StandardTableau& t);
Partition shape(const StandardTableau& t);
std::vector<std::vector<int>> tableau_rows(const StandardTableau& t);
// Display form "(1,3,4,6),(2,7),(5,8)".
std::string format_rows(const StandardTableau& t);

// Subtableau on entries 1..j. IndexOutOfRange unless 0 <= j <= n.
StandardTableau restrict_tableau(const StandardTableau& t, int j);

// Removes the largest entry.
StandardTableau delete_largest(const StandardTableau& t);

// Row-wise concatenation: appends the rows of u, with entries shifted up by
// the size of t. The word of the result is the two words concatenated.
StandardTableau concat(const StandardTableau& t, const StandardTableau& u);

// Deletes the first row and renumbers: drop the 1s from the word, then
// decrement every remaining letter.
std::vector<int> crop_word(const std::vector<int>& w);
StandardTableau crop(const StandardTableau& t);

// Descents: j such that j+1 lies in a strictly lower row.
std::vector<int> descents(const StandardTableau& t);
long long maj(const StandardTableau& t);

// Sum of (j-1) over positions j holding letter 1.
long long sumone(const std::vector<int>& w);

// All standard tableaux of the given shape, in lexicographic word order.
// SizeLimitExceeded when the shape size exceeds bound.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int bound = 12);

// All standard tableaux with n boxes, grouped by partitions_of(n) order.
std::vector<StandardTableau> all_syt_of_size(int n, int bound = 12);

// Row insertion: returns the insertion tableau P and recording tableau Q.
std::pair<StandardTableau, StandardTableau> rs_insert(const Permutation& w);

} // namespace rtab
