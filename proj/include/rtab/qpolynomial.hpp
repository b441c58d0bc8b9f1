#pragma once

#include <map>
#include <string>

#include "rtab/bigint.hpp"

namespace rtab {

// Polynomial in q with nonnegative integer exponents and big integer
// coefficients. Zero coefficients are never stored.
struct QPolynomial {
    std::map<long long, bigint> coeffs;

    bool operator==(const QPolynomial&) const = default;
};

QPolynomial qpoly_zero();
QPolynomial qpoly_one();
QPolynomial qpoly_monomial(long long exponent, bigint coeff = 1);

QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b);

bigint qpoly_eval_one(const QPolynomial& p);

// Gaussian binomial coefficient [n choose k]_q.
QPolynomial qbinomial(int n, int k);

// Ascending exponents, e.g. "q^7 + 2*q^8 + q^11"; "0" for the zero polynomial.
std::string format_qpoly(const QPolynomial& p);

} // namespace rtab
