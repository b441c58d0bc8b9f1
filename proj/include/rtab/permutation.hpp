#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rtab/partition.hpp"

namespace rtab {

// Permutation of [n] in one-line notation. img[i-1] is the image of i.
struct Permutation {
    std::vector<int> img;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
};

int perm_n(const Permutation& w);
Permutation identity_perm(int n);

// Validates that img is a bijection on [n].
Permutation make_permutation(std::vector<int> img);

// Accepts comma-separated images "7,5,1,8,2,3,6,4" or a digit string when n <= 9.
Permutation parse_permutation(const std::string& text);

// Digit string when n <= 9, else comma-separated.
std::string format_permutation(const Permutation& w);

// (u v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

// Left multiplication by the simple reflection s_j: swaps the values j, j+1.
Permutation left_mult_simple(const Permutation& w, int j);

// Right multiplication by the transposition t_{i,j}: swaps positions i and j.
Permutation right_mult_transposition(const Permutation& w, int i, int j);

long long perm_length(const Permutation& w);
std::vector<std::pair<int, int>> perm_inversions(const Permutation& w);

std::vector<int> lehmer_code(const Permutation& w);
// Requires code[i-1] <= n-i; otherwise InvalidCode.
Permutation from_lehmer(const std::vector<int>& code);

// Bruhat order via sorted-prefix dominance. SizeMismatch when sizes differ.
bool bruhat_leq(const Permutation& v, const Permutation& w);

Permutation longest_element(int n);

// Longest element of the Young subgroup S_lambda: reverses each block of values.
Permutation w0_young(const Partition& lambda);

// Minimum-length representative of the coset S_lambda w.
Permutation min_coset_rep(const Permutation& w, const Partition& lambda);
bool is_min_coset(const Permutation& w, const Partition& lambda);

// Factors w = w_lambda * rep with w_lambda in S_lambda and rep minimal in its coset.
std::pair<Permutation, Permutation> parabolic_factor(const Permutation& w,
                                                     const Partition& lambda);

std::vector<Permutation> all_permutations(int n);

// All minimum-length coset representatives for S_lambda in S_n.
std::vector<Permutation> min_coset_reps(const Partition& lambda);

} // namespace rtab
