#pragma once

#include <vector>

#include "rtab/bigint.hpp"
#include "rtab/partition.hpp"
#include "rtab/qpolynomial.hpp"

namespace rtab {

bigint binomial(long long n, long long k);

// Number of Richardson tableaux of the given shape: the product over i of
// C(lambda_i + lambda_{i+2} + ..., lambda_{i+1} + lambda_{i+2} + ...).
bigint count_richardson(const Partition& lambda);

// Major-index generating polynomial of the Richardson tableaux of the shape:
// q^e times a product of Gaussian binomials with the same arguments, where
// e is the sum of lambda_i * lambda_j over pairs 2 <= i <= j.
QPolynomial q_count_richardson(const Partition& lambda);

bigint motzkin(long long n);
bigint involutions(long long n);

// Exact ratio (number of Richardson tableaux with n boxes) / (involutions of
// [n]); the numerator equals the Motzkin number M_n.
bigrat richardson_proportion(long long n);

// Per-shape Richardson counts for all partitions of n, their total, and the
// Motzkin number it should equal. SizeLimitExceeded when n exceeds bound.
struct RefinementRow {
    Partition shape;
    bigint count;
};

struct RefinementResult {
    std::vector<RefinementRow> rows;
    bigint total;
    bigint motzkin_value;
    bool ok;
};

RefinementResult motzkin_refinement_check(int n, int bound = 20);

// Coefficient of x^alpha in the generating function R_ell(x_1..x_ell) whose
// coefficients count Richardson tableaux by shape; zero when alpha is not a
// partition. Computed from the recurrence P_l = P_{l-1} R_{l-2} x_l,
// R_l = R_{l-1} / (1 - P_l R_{l-1}) with truncated series.
bigint gf_coefficient(int ell, const std::vector<int>& alpha);

// Hook length formula; internal cross-check for the tableau enumerator.
bigint syt_count_hook(const Partition& lambda);

// Motzkin paths counted directly; oracle for small n.
bigint motzkin_paths_brute(int n);

} // namespace rtab
