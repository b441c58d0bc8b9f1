#include "rtab/springer.hpp"

#include <algorithm>
#include <tuple>

#include "rtab/error.hpp"
#include "rtab/evacuation.hpp"
#include "rtab/richardson.hpp"

namespace rtab {

Permutation reading_w(const StandardTableau& t) {
    int n = tableau_size(t);
    std::vector<int> reading;
    auto rows = tableau_rows(t);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        reading.insert(reading.end(), it->begin(), it->end());
    Permutation rho{std::move(reading)};
    Permutation w0 = longest_element(n);
    return compose(w0, compose(inverse(rho), w0));
}

Permutation reading_v(const StandardTableau& t) {
    StandardTableau dual = evacuate(t).result;
    std::vector<int> reading;
    for (const auto& row : tableau_rows(dual))
        reading.insert(reading.end(), row.begin(), row.end());
    return inverse(Permutation{std::move(reading)});
}

std::vector<int> lehmer_w_direct(const StandardTableau& t) {
    int n = tableau_size(t);
    std::vector<int> code(n, 0);
    for (int j = 1; j <= n; ++j) {
        int count = 0;
        for (int i = 1; i < j; ++i)
            if (t.word[i - 1] < t.word[j - 1]) ++count;
        code[n - j] = count;
    }
    return code;
}

long long length_gap(const StandardTableau& t) {
    return perm_length(reading_w(t)) - perm_length(reading_v(t));
}

bool is_richardson_gap(const StandardTableau& t) {
    return length_gap(t) == n_lambda(shape(t));
}

bool is_richardson_bruhat(const StandardTableau& t) {
    int n = tableau_size(t);
    Permutation v = reading_v(t);
    Permutation w = reading_w(t);
    std::vector<int> sums = partial_sums(shape(t));
    for (int j = 1; j < n; ++j) {
        if (std::find(sums.begin(), sums.end(), j) != sums.end()) continue;
        if (bruhat_leq(left_mult_simple(v, j), w)) return false;
    }
    return true;
}

CellIndex richardson_envelope(const StandardTableau& t) {
    CellIndex cell{reading_v(t), reading_w(t), 0};
    cell.dim = perm_length(cell.w) - perm_length(cell.v);
    return cell;
}

bool in_Z(const Permutation& v, const Permutation& w, const Partition& lambda) {
    int n = partition_size(lambda);
    if (perm_n(v) != n || perm_n(w) != n) fail(errc::size_mismatch, "in_Z");
    if (!is_min_coset(v, lambda) || !is_min_coset(w, lambda)) return false;
    if (!bruhat_leq(v, w)) return false;
    std::vector<int> sums = partial_sums(lambda);
    for (int j = 1; j < n; ++j) {
        if (std::find(sums.begin(), sums.end(), j) != sums.end()) continue;
        if (bruhat_leq(left_mult_simple(v, j), w)) return false;
    }
    return true;
}

namespace {

// Dominance table D[i][k] = #{t <= i : w(t) <= k}; v <= w iff D_v >= D_w
// entrywise.
std::vector<signed char> dominance_table(const Permutation& w) {
    int n = perm_n(w);
    std::vector<signed char> d(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int count = (i > 0) ? d[(i - 1) * static_cast<size_t>(n) + k] : 0;
            if (w.img[i] <= k + 1) ++count;
            d[i * static_cast<size_t>(n) + k] = static_cast<signed char>(count);
        }
    return d;
}

bool table_leq(const std::vector<signed char>& dv, const std::vector<signed char>& dw) {
    for (size_t i = 0; i < dv.size(); ++i)
        if (dv[i] < dw[i]) return false;
    return true;
}

bool cell_conditions(const Permutation& v, const Permutation& w, const std::vector<int>& sums,
                     int n) {
    for (int j = 1; j < n; ++j) {
        if (std::find(sums.begin(), sums.end(), j) != sums.end()) continue;
        if (bruhat_leq(left_mult_simple(v, j), w)) return false;
    }
    return true;
}

} // namespace

std::vector<CellIndex> enumerate_cells(const Partition& lambda, int bound) {
    int n = partition_size(lambda);
    if (n > bound) fail(errc::size_limit_exceeded, "partition size " + std::to_string(n));
    std::vector<Permutation> reps = min_coset_reps(lambda);
    std::vector<std::vector<signed char>> tables;
    std::vector<long long> lengths;
    tables.reserve(reps.size());
    for (const Permutation& rep : reps) {
        tables.push_back(dominance_table(rep));
        lengths.push_back(perm_length(rep));
    }
    std::vector<int> sums = partial_sums(lambda);
    std::vector<CellIndex> out;
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) {
            if (lengths[a] > lengths[b]) continue;
            if (!table_leq(tables[a], tables[b])) continue;
            if (!cell_conditions(reps[a], reps[b], sums, n)) continue;
            out.push_back({reps[a], reps[b], lengths[b] - lengths[a]});
        }
    std::sort(out.begin(), out.end(), [](const CellIndex& x, const CellIndex& y) {
        return std::tie(x.dim, x.v.img, x.w.img) < std::tie(y.dim, y.v.img, y.w.img);
    });
    return out;
}

std::vector<CellIndex> top_cells(const Partition& lambda, int bound) {
    int n = partition_size(lambda);
    if (n > bound) fail(errc::size_limit_exceeded, "partition size " + std::to_string(n));
    long long target = n_lambda(lambda);
    std::vector<Permutation> reps = min_coset_reps(lambda);
    std::vector<long long> lengths;
    for (const Permutation& rep : reps) lengths.push_back(perm_length(rep));
    std::vector<int> sums = partial_sums(lambda);
    std::vector<CellIndex> out;
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) {
            if (lengths[b] - lengths[a] != target) continue;
            if (!bruhat_leq(reps[a], reps[b])) continue;
            if (!cell_conditions(reps[a], reps[b], sums, n)) continue;
            out.push_back({reps[a], reps[b], target});
        }
    std::sort(out.begin(), out.end(), [](const CellIndex& x, const CellIndex& y) {
        return std::tie(x.dim, x.v.img, x.w.img) < std::tie(y.dim, y.v.img, y.w.img);
    });
    return out;
}

std::vector<std::pair<int, int>> deodhar_set(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) fail(errc::not_comparable, "v must be below w");
    int n = perm_n(v);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (v.img[i - 1] > v.img[j - 1]) continue;
            if (bruhat_leq(right_mult_transposition(v, i, j), w)) out.emplace_back(i, j);
        }
    return out;
}

bool schubert_smooth_at(const Permutation& w, const Permutation& v) {
    long long gap = perm_length(w) - perm_length(v);
    return static_cast<long long>(deodhar_set(v, w).size()) == gap;
}

bool richardson_smooth(const Permutation& v, const Permutation& w) {
    if (perm_n(v) != perm_n(w)) fail(errc::size_mismatch, "richardson_smooth");
    Permutation w0 = longest_element(perm_n(v));
    return schubert_smooth_at(w, v) && schubert_smooth_at(compose(w0, v), compose(w0, w));
}

std::vector<std::pair<int, int>> reflection_pairs_tableau(const StandardTableau& t,
                                                          ReflectionMode mode) {
    if (!is_richardson_def(t)) fail(errc::not_richardson, format_word(t.word));
    const StandardTableau source = mode == ReflectionMode::evac ? evacuate(t).result : t;
    const std::vector<int>& row_of = source.word;
    int n = tableau_size(source);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (row_of[i - 1] >= row_of[j - 1]) continue;
            bool largest = true;
            for (int e = i + 1; e <= j; ++e)
                if (row_of[e - 1] == row_of[i - 1]) {
                    largest = false;
                    break;
                }
            if (largest) out.emplace_back(i, j);
        }
    return out;
}

bool permutation_flag_in_fiber(const Permutation& w, const Partition& lambda) {
    return is_min_coset(w, lambda);
}

bool is_pr_richardson_component(const StandardTableau& t) {
    if (!is_richardson_def(t)) fail(errc::not_richardson, format_word(t.word));
    for (const auto& factor : prime_decomposition_word(t.word))
        for (size_t p = 0; p < factor.size(); ++p)
            if (factor[p] != static_cast<int>(p) + 1) return false;
    return true;
}

} // namespace rtab
