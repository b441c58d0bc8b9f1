#include "rtab/richardson.hpp"

#include <algorithm>

#include "rtab/error.hpp"

namespace rtab {

bool is_richardson_def(const StandardTableau& t) {
    const std::vector<int>& w = t.word;
    for (size_t j = 0; j < w.size(); ++j) {
        int row = w[j];
        if (row == 1) continue;
        int above = 0, below = 0;
        for (size_t p = 0; p < j; ++p) {
            if (w[p] == row - 1) above = static_cast<int>(p) + 1;
            if (w[p] >= row) below = static_cast<int>(p) + 1;
        }
        if (below > above) return false;
    }
    return true;
}

bool is_richardson_word(const std::vector<int>& w) {
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j] < 1) return false;
        if (w[j] == 1) continue;
        bool found = false;
        for (size_t p = j; p-- > 0;) {
            if (w[p] == w[j] - 1) {
                found = true;
                break;
            }
            if (w[p] >= w[j]) return false;
        }
        if (!found) return false;
    }
    return true;
}

bool is_richardson_crop(const StandardTableau& t) {
    const std::vector<int>& w = t.word;
    for (size_t j = 0; j < w.size(); ++j)
        if (w[j] == 2 && (j == 0 || w[j - 1] != 1)) return false;
    return is_richardson_word(crop_word(w));
}

bool is_richardson_condition2(const StandardTableau& t) {
    const std::vector<int>& w = t.word;
    for (size_t j = 0; j < w.size(); ++j) {
        int row = w[j];
        if (row == 1) continue;
        std::vector<int> row_max(row - 1, 0);
        int below = 0;
        for (size_t p = 0; p < j; ++p) {
            if (w[p] < row)
                row_max[w[p] - 1] = static_cast<int>(p) + 1;
            else
                below = static_cast<int>(p) + 1;
        }
        for (int m : row_max)
            if (m <= below) return false;
    }
    return true;
}

std::vector<std::vector<int>> prime_decomposition_word(const std::vector<int>& w) {
    if (!is_richardson_word(w)) fail(errc::not_richardson, format_word(w));
    std::vector<std::pair<int, int>> spans;
    int e = static_cast<int>(w.size());
    while (e > 0) {
        int need = w[e - 1] - 1;
        int p = e - 1;
        int q = e - 2;
        while (need >= 1) {
            while (w[q] != need) --q;
            p = q;
            --q;
            --need;
        }
        spans.emplace_back(p, e);
        e = p;
    }
    std::reverse(spans.begin(), spans.end());
    std::vector<std::vector<int>> out;
    for (auto [a, b] : spans) out.emplace_back(w.begin() + a, w.begin() + b);
    return out;
}

std::vector<StandardTableau> prime_decomposition(const StandardTableau& t) {
    std::vector<StandardTableau> out;
    for (auto& factor : prime_decomposition_word(t.word))
        out.push_back(tableau_from_word(std::move(factor)));
    return out;
}

bool is_prime_word(const std::vector<int>& w) {
    if (!is_richardson_word(w)) fail(errc::not_richardson, format_word(w));
    if (w.empty()) fail(errc::empty_word, "primality of the empty word");
    int ell = *std::max_element(w.begin(), w.end());
    if (w.back() != ell) return false;
    if (std::count(w.begin(), w.end(), ell) != 1) return false;
    std::vector<int> first(ell + 1, -1);
    for (size_t p = 0; p < w.size(); ++p)
        if (first[w[p]] < 0) first[w[p]] = static_cast<int>(p);
    for (int j = 1; j < ell; ++j)
        for (int p = first[j] + 1; p < first[j + 1]; ++p)
            if (w[p] >= j) return false;
    return true;
}

bool is_prime(const StandardTableau& t) { return is_prime_word(t.word); }

namespace {

std::vector<int> concat_words(const std::vector<std::vector<int>>& parts, size_t from, size_t to) {
    std::vector<int> out;
    for (size_t i = from; i < to; ++i) out.insert(out.end(), parts[i].begin(), parts[i].end());
    return out;
}

} // namespace

std::vector<int> psi(const std::vector<int>& r) {
    bool prime;
    try {
        prime = is_prime_word(r);
    } catch (const error&) {
        prime = false;
    }
    if (!prime) fail(errc::not_prime, format_word(r));
    int ell = *std::max_element(r.begin(), r.end());
    if (ell == 1) fail(errc::largest_letter_too_small, "largest letter must be at least 2");
    if (ell == 2) return {};
    // r = s . t . (ell-1) . u . ell; the first prime factor of r without its
    // final letter is s . t . (ell-1), and s is in turn its first prime
    // factor once the trailing ell-1 is removed.
    std::vector<int> p(r.begin(), r.end() - 1);
    auto factors = prime_decomposition_word(p);
    std::vector<int> head = factors[0];
    std::vector<int> u = concat_words(factors, 1, factors.size());
    head.pop_back();
    auto head_factors = prime_decomposition_word(head);
    std::vector<int> s = head_factors[0];
    std::vector<int> t = concat_words(head_factors, 1, head_factors.size());
    std::vector<int> out = t;
    out.insert(out.end(), s.begin(), s.end());
    out.insert(out.end(), u.begin(), u.end());
    return out;
}

std::vector<int> psi_inverse(const std::vector<int>& q, int ell) {
    if (q.empty()) {
        if (ell != 2) fail(errc::letter_mismatch, "empty word requires ell = 2");
        return {1, 2};
    }
    int largest = *std::max_element(q.begin(), q.end());
    if (largest != ell - 2) fail(errc::letter_mismatch, "largest letter must be ell - 2");
    auto factors = prime_decomposition_word(q);
    size_t si = 0;
    while (si < factors.size() &&
           *std::max_element(factors[si].begin(), factors[si].end()) != ell - 2)
        ++si;
    if (si == factors.size()) fail(errc::letter_mismatch, "no factor attains ell - 2");
    std::vector<int> out = factors[si];
    std::vector<int> t = concat_words(factors, 0, si);
    out.insert(out.end(), t.begin(), t.end());
    out.push_back(ell - 1);
    std::vector<int> u = concat_words(factors, si + 1, factors.size());
    out.insert(out.end(), u.begin(), u.end());
    out.push_back(ell);
    return out;
}

ExtensionStream::ExtensionStream(const std::vector<int>& s, Partition target) {
    if (!is_richardson_word(s)) fail(errc::not_richardson, format_word(s));
    for (int letter : s) {
        if (letter == 1) base_.push_back(1);
        base_.push_back(letter + 1);
    }
    // The target shape must agree with s below the first row, and its first
    // row must have room for the 1s already present.
    int ell = s.empty() ? 0 : *std::max_element(s.begin(), s.end());
    std::vector<int> mult(ell + 1, 0);
    for (int letter : s) ++mult[letter];
    int rows = partition_length(target);
    if (s.empty()) {
        if (rows > 1) return;
    } else if (rows != ell + 1) {
        return;
    }
    for (int i = 1; i < rows; ++i)
        if (target.parts[i] != mult[i]) return;
    int ones = s.empty() ? 0 : mult[1];
    int first_row = rows == 0 ? 0 : target.parts[0];
    if (first_row < ones) return;
    int extra = first_row - ones;
    for (int p = 0; p <= static_cast<int>(base_.size()); ++p)
        if (p == static_cast<int>(base_.size()) || base_[p] != 2) slots_.push_back(p);
    choice_.assign(extra, 0);
    active_ = true;
    first_ = true;
}

std::vector<int> ExtensionStream::build() const {
    std::vector<int> out;
    size_t k = 0;
    for (int p = 0; p <= static_cast<int>(base_.size()); ++p) {
        while (k < choice_.size() && slots_[choice_[k]] == p) {
            out.push_back(1);
            ++k;
        }
        if (p < static_cast<int>(base_.size())) out.push_back(base_[p]);
    }
    return out;
}

std::optional<std::vector<int>> ExtensionStream::next() {
    if (!active_) return std::nullopt;
    if (first_) {
        first_ = false;
        return build();
    }
    // Advance the weakly increasing index vector in lexicographic order.
    int k = static_cast<int>(choice_.size()) - 1;
    while (k >= 0 && choice_[k] == static_cast<int>(slots_.size()) - 1) --k;
    if (k < 0) {
        active_ = false;
        return std::nullopt;
    }
    int value = choice_[k] + 1;
    for (size_t i = k; i < choice_.size(); ++i) choice_[i] = value;
    return build();
}

std::vector<std::vector<int>> richardson_extensions(const std::vector<int>& s,
                                                    const Partition& target) {
    ExtensionStream stream(s, target);
    std::vector<std::vector<int>> out;
    while (auto word = stream.next()) out.push_back(std::move(*word));
    return out;
}

} // namespace rtab
