#include "rtab/guemes.hpp"

#include <algorithm>
#include <functional>

#include "rtab/error.hpp"
#include "rtab/springer.hpp"

namespace rtab {

GuemesTableau make_guemes(std::vector<std::vector<int>> rows) {
    size_t m = rows.size() + 1;
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != m - 1 - i)
            fail(errc::invalid_argument, "rows must form a staircase");
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0 && rows[i][j] <= rows[i][j - 1])
                fail(errc::invalid_argument, "rows must strictly increase");
            if (i > 0 && rows[i][j] <= rows[i - 1][j])
                fail(errc::invalid_argument, "columns must strictly increase");
            if (i > 0 && rows[i][j] > rows[i - 1][j + 1])
                fail(errc::invalid_argument, "diagonals must weakly increase");
        }
    return GuemesTableau{std::move(rows)};
}

int guemes_m(const GuemesTableau& t) { return static_cast<int>(t.rows.size()) + 1; }

Permutation x_tau(const GuemesTableau& t, int n) {
    int m = guemes_m(t);
    Permutation x = identity_perm(n);
    for (int j = 1; j <= m - 1; ++j)
        for (int i = m - j; i >= 1; --i) {
            int entry = t.rows[i - 1][j - 1];
            if (entry < 1 || entry > n - 1)
                fail(errc::entry_out_of_range, "entry " + std::to_string(entry));
            std::swap(x.img[entry - 1], x.img[entry]);
        }
    return x;
}

bool is_reduced(const GuemesTableau& t, int n) {
    int m = guemes_m(t);
    return perm_length(x_tau(t, n)) == static_cast<long long>(m) * (m - 1) / 2;
}

std::vector<GuemesTableau> guemes_fillings(int m, const std::vector<int>& first_row, int n) {
    std::vector<GuemesTableau> out;
    if (m < 1) return out;
    if (static_cast<int>(first_row.size()) != m - 1)
        fail(errc::invalid_argument, "first row must have m - 1 entries");
    for (size_t j = 0; j < first_row.size(); ++j) {
        if (first_row[j] < 1 || first_row[j] > n - 1) return out;
        if (j > 0 && first_row[j] <= first_row[j - 1]) return out;
    }
    std::vector<std::vector<int>> rows(m - 1);
    if (m >= 2) rows[0] = first_row;
    for (int i = 2; i <= m - 1; ++i) rows[i - 1].assign(m - i, 0);

    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i > m - 1) {
            out.push_back(GuemesTableau{rows});
            return;
        }
        int low = rows[i - 2][j - 1];
        if (j > 1) low = std::max(low, rows[i - 1][j - 2]);
        int high = rows[i - 2][j];
        for (int value = low + 1; value <= std::min(high, n - 1); ++value) {
            rows[i - 1][j - 1] = value;
            if (j == static_cast<int>(rows[i - 1].size()))
                fill(i + 1, 1);
            else
                fill(i, j + 1);
        }
        rows[i - 1][j - 1] = 0;
    };
    if (m <= 2)
        out.push_back(GuemesTableau{rows});
    else
        fill(2, 1);
    return out;
}

std::vector<Permutation> hook_expansion(const StandardTableau& t) {
    Partition sh = shape(t);
    for (int i = 1; i < partition_length(sh); ++i)
        if (sh.parts[i] != 1) fail(errc::not_hook_shape, format_partition(sh));
    int n = tableau_size(t);
    int k = partition_length(sh) == 0 ? 0 : sh.parts[0];
    int m = n - k + 1;
    Permutation w = reading_w(t);
    Permutation winv = inverse(w);
    std::vector<int> first_row;
    for (int j = k + 1; j <= n; ++j) first_row.push_back(winv.img[j - 1]);
    std::sort(first_row.begin(), first_row.end());
    Permutation w0 = longest_element(n);
    std::vector<Permutation> out;
    for (const GuemesTableau& tau : guemes_fillings(m, first_row, n))
        if (is_reduced(tau, n)) out.push_back(compose(w0, x_tau(tau, n)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rtab
