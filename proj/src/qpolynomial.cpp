#include "rtab/qpolynomial.hpp"

#include <vector>

#include "rtab/error.hpp"

namespace rtab {

QPolynomial qpoly_zero() { return {}; }

QPolynomial qpoly_one() { return qpoly_monomial(0); }

QPolynomial qpoly_monomial(long long exponent, bigint coeff) {
    QPolynomial p;
    if (coeff != 0) p.coeffs[exponent] = std::move(coeff);
    return p;
}

QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out = a;
    for (const auto& [e, c] : b.coeffs) {
        bigint& slot = out.coeffs[e];
        slot += c;
        if (slot == 0) out.coeffs.erase(e);
    }
    return out;
}

QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            bigint& slot = out.coeffs[ea + eb];
            slot += ca * cb;
            if (slot == 0) out.coeffs.erase(ea + eb);
        }
    return out;
}

bigint qpoly_eval_one(const QPolynomial& p) {
    bigint total = 0;
    for (const auto& [e, c] : p.coeffs) total += c;
    return total;
}

QPolynomial qbinomial(int n, int k) {
    if (n < 0) fail(errc::invalid_argument, "negative upper index");
    if (k < 0 || k > n) return qpoly_zero();
    // Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k].
    std::vector<QPolynomial> row(1, qpoly_one());
    for (int m = 1; m <= n; ++m) {
        std::vector<QPolynomial> next(m + 1);
        for (int j = 0; j <= m; ++j) {
            QPolynomial value = (j > 0) ? row[j - 1] : qpoly_zero();
            if (j < m) value = qpoly_add(value, qpoly_mul(qpoly_monomial(j), row[j]));
            next[j] = std::move(value);
        }
        row = std::move(next);
    }
    return row[k];
}

std::string format_qpoly(const QPolynomial& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : p.coeffs) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.str();
        if (e == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace rtab
