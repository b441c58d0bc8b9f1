#pragma once

#include <optional>
#include <vector>

#include "rtab/partition.hpp"
#include "rtab/tableau.hpp"

namespace rtab {

// Definition form: for every entry j below the first row, the last entry of
// the subtableau on 1..j-1 in the row directly above j must exceed every
// entry of that subtableau lying in the row of j or below.
bool is_richardson_def(const StandardTableau& t);

// Word form: for every letter r_j >= 2, scanning the prefix right to left,
// r_j - 1 occurs before any letter >= r_j. Implies the lattice property, so
// this accepts arbitrary integer sequences.
bool is_richardson_word(const std::vector<int>& w);

// Crop form: the crop is Richardson and every second-row entry j has j-1 in
// the first row.
bool is_richardson_crop(const StandardTableau& t);

// Every row above j must have its largest entry of the subtableau on 1..j-1
// exceed everything at or below the row of j.
bool is_richardson_condition2(const StandardTableau& t);

// Factors a Richardson word into prime Richardson words. NotRichardson when
// the input is not Richardson.
std::vector<std::vector<int>> prime_decomposition_word(const std::vector<int>& w);
std::vector<StandardTableau> prime_decomposition(const StandardTableau& t);

// A nonempty Richardson word is prime when its largest letter ell occurs once,
// at the end, and between the first occurrences of j and j+1 only letters
// < j appear. EmptyWord for the empty word, NotRichardson otherwise.
bool is_prime_word(const std::vector<int>& w);
bool is_prime(const StandardTableau& t);

// Bijection from prime Richardson words with largest letter ell >= 2 to
// Richardson words whose largest letter is ell - 2. Writing
// r = s . t . (ell-1) . u . ell with s prime, largest(s) = ell-2, and
// largest(t) <= ell-3, returns t . s . u. NotPrime unless r is prime;
// LargestLetterTooSmall when ell = 1.
std::vector<int> psi(const std::vector<int>& r);

// Inverse of psi. Requires largest(q) = ell - 2, or q empty with ell = 2;
// LetterMismatch otherwise.
std::vector<int> psi_inverse(const std::vector<int>& q, int ell);

// Lazily yields the Richardson words of the target shape whose crop is s, in
// lexicographic order of the vector of insertion positions. The words are
// built by incrementing s, rewriting each 2 as 12, and inserting extra 1s
// anywhere except immediately before a 2.
class ExtensionStream {
public:
    ExtensionStream(const std::vector<int>& s, Partition target);
    std::optional<std::vector<int>> next();

private:
    std::vector<int> base_;
    std::vector<int> slots_;
    std::vector<int> choice_;
    bool active_ = false;
    bool first_ = false;

    std::vector<int> build() const;
};

std::vector<std::vector<int>> richardson_extensions(const std::vector<int>& s,
                                                    const Partition& target);

} // namespace rtab
