#include "rtab/enumeration.hpp"

#include <functional>

#include "rtab/error.hpp"
#include "rtab/richardson.hpp"
#include "rtab/tableau.hpp"

namespace rtab {

bigint binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

namespace {

// lambda_i + lambda_{i+2} + lambda_{i+3} + ... as the top argument and
// lambda_{i+1} + lambda_{i+2} + ... as the bottom one, for i = 1..ell-1.
std::vector<std::pair<long long, long long>> count_factors(const Partition& lambda) {
    int ell = partition_length(lambda);
    std::vector<long long> suffix(ell + 1, 0);
    for (int i = ell - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + lambda.parts[i];
    std::vector<std::pair<long long, long long>> out;
    for (int i = 0; i + 1 < ell; ++i)
        out.emplace_back(lambda.parts[i] + suffix[i + 2], suffix[i + 1]);
    return out;
}

} // namespace

bigint count_richardson(const Partition& lambda) {
    bigint result = 1;
    for (auto [top, bottom] : count_factors(lambda)) result *= binomial(top, bottom);
    return result;
}

QPolynomial q_count_richardson(const Partition& lambda) {
    int ell = partition_length(lambda);
    long long exponent = 0;
    for (int i = 1; i < ell; ++i)
        for (int j = i; j < ell; ++j)
            exponent += static_cast<long long>(lambda.parts[i]) * lambda.parts[j];
    QPolynomial result = qpoly_monomial(exponent);
    for (auto [top, bottom] : count_factors(lambda))
        result = qpoly_mul(result, qbinomial(static_cast<int>(top), static_cast<int>(bottom)));
    return result;
}

bigint motzkin(long long n) {
    if (n < 0) fail(errc::invalid_argument, "negative index");
    std::vector<bigint> m(n + 1);
    m[0] = 1;
    for (long long i = 1; i <= n; ++i) {
        m[i] = m[i - 1];
        for (long long k = 0; k + 2 <= i; ++k) m[i] += m[k] * m[i - 2 - k];
    }
    return m[n];
}

bigint involutions(long long n) {
    if (n < 0) fail(errc::invalid_argument, "negative index");
    bigint prev = 1, cur = 1;
    for (long long i = 2; i <= n; ++i) {
        bigint next = cur + (i - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == 0 ? bigint(1) : cur;
}

bigrat richardson_proportion(long long n) {
    return bigrat(motzkin(n), involutions(n));
}

RefinementResult motzkin_refinement_check(int n, int bound) {
    if (n < 0) fail(errc::invalid_argument, "negative size");
    if (n > bound) fail(errc::size_limit_exceeded, "size " + std::to_string(n));
    RefinementResult result;
    result.total = 0;
    for (const Partition& shape : partitions_of(n)) {
        bigint count = count_richardson(shape);
        result.total += count;
        result.rows.push_back({shape, std::move(count)});
    }
    result.motzkin_value = motzkin(n);
    result.ok = result.total == result.motzkin_value;
    return result;
}

namespace {

// Dense polynomial truncated to exponents 0..caps[i] in each variable.
struct TruncSeries {
    std::vector<int> caps;
    std::vector<bigint> c;

    explicit TruncSeries(std::vector<int> caps_) : caps(std::move(caps_)) {
        size_t cells = 1;
        for (int cap : caps) cells *= static_cast<size_t>(cap) + 1;
        c.assign(cells, 0);
    }

    size_t index(const std::vector<int>& expo) const {
        size_t idx = 0;
        for (size_t i = 0; i < caps.size(); ++i) idx = idx * (caps[i] + 1) + expo[i];
        return idx;
    }
};

TruncSeries ts_const(const std::vector<int>& caps, bigint value) {
    TruncSeries s(caps);
    s.c[0] = std::move(value);
    return s;
}

TruncSeries ts_variable(const std::vector<int>& caps, int var) {
    TruncSeries s(caps);
    if (caps[var] >= 1) {
        std::vector<int> expo(caps.size(), 0);
        expo[var] = 1;
        s.c[s.index(expo)] = 1;
    }
    return s;
}

void ts_decode(const TruncSeries& s, size_t idx, std::vector<int>& expo) {
    for (size_t i = s.caps.size(); i-- > 0;) {
        expo[i] = static_cast<int>(idx % (s.caps[i] + 1));
        idx /= s.caps[i] + 1;
    }
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(a.caps);
    std::vector<int> ea(a.caps.size()), eb(a.caps.size()), ec(a.caps.size());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        ts_decode(a, i, ea);
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            ts_decode(b, j, eb);
            bool fits = true;
            for (size_t v = 0; v < ec.size(); ++v) {
                ec[v] = ea[v] + eb[v];
                if (ec[v] > a.caps[v]) {
                    fits = false;
                    break;
                }
            }
            if (fits) out.c[out.index(ec)] += a.c[i] * b.c[j];
        }
    }
    return out;
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out = a;
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

// 1 / (1 - f) as a geometric series; terminates because every term of f has
// positive degree in some variable, so powers beyond the total cap vanish.
TruncSeries ts_geometric(const TruncSeries& f) {
    int total_cap = 0;
    for (int cap : f.caps) total_cap += cap;
    TruncSeries out = ts_const(f.caps, 1);
    TruncSeries power = ts_const(f.caps, 1);
    for (int k = 1; k <= total_cap; ++k) {
        power = ts_mul(power, f);
        bool zero = true;
        for (const bigint& coeff : power.c)
            if (coeff != 0) {
                zero = false;
                break;
            }
        if (zero) break;
        out = ts_add(out, power);
    }
    return out;
}

} // namespace

bigint gf_coefficient(int ell, const std::vector<int>& alpha) {
    if (ell < 0 || static_cast<int>(alpha.size()) > ell)
        fail(errc::invalid_argument, "alpha longer than variable count");
    for (int a : alpha)
        if (a < 0) fail(errc::invalid_argument, "negative exponent");
    std::vector<int> caps(ell, 0);
    for (size_t i = 0; i < alpha.size(); ++i) caps[i] = alpha[i];
    if (ell == 0) return alpha.empty() ? bigint(1) : bigint(0);

    // R_0 = 1, P_1 = x_1, P_l = P_{l-1} R_{l-2} x_l, R_l = R_{l-1}/(1 - P_l R_{l-1}).
    TruncSeries r_prev2 = ts_const(caps, 1);
    TruncSeries p = ts_variable(caps, 0);
    TruncSeries r_prev = ts_mul(r_prev2, ts_geometric(ts_mul(p, r_prev2)));
    for (int l = 2; l <= ell; ++l) {
        p = ts_mul(ts_mul(p, r_prev2), ts_variable(caps, l - 1));
        TruncSeries r = ts_mul(r_prev, ts_geometric(ts_mul(p, r_prev)));
        r_prev2 = std::move(r_prev);
        r_prev = std::move(r);
    }
    std::vector<int> expo(ell, 0);
    for (size_t i = 0; i < alpha.size(); ++i) expo[i] = alpha[i];
    return r_prev.c[r_prev.index(expo)];
}

bigint syt_count_hook(const Partition& lambda) {
    int n = partition_size(lambda);
    std::vector<int> conj;
    for (int i = 0; i < partition_length(lambda); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            if (j >= static_cast<int>(conj.size())) conj.push_back(0);
            ++conj[j];
        }
    bigint numer = 1;
    for (int i = 2; i <= n; ++i) numer *= i;
    bigint denom = 1;
    for (int i = 0; i < partition_length(lambda); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j)
            denom *= (lambda.parts[i] - j) + (conj[j] - i) - 1;
    return numer / denom;
}

bigint motzkin_paths_brute(int n) {
    if (n < 0) fail(errc::invalid_argument, "negative index");
    // Count lattice paths of n steps in {+1, 0, -1} staying nonnegative and
    // ending at height 0.
    bigint total = 0;
    std::function<void(int, int)> walk = [&](int step, int height) {
        if (step == n) {
            if (height == 0) ++total;
            return;
        }
        walk(step + 1, height + 1);
        walk(step + 1, height);
        if (height > 0) walk(step + 1, height - 1);
    };
    walk(0, 0);
    return total;
}

} // namespace rtab
