#include "rtab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rtab/error.hpp"

namespace rtab {

int perm_n(const Permutation& w) { return static_cast<int>(w.img.size()); }

Permutation identity_perm(int n) {
    Permutation w;
    w.img.resize(n);
    std::iota(w.img.begin(), w.img.end(), 1);
    return w;
}

Permutation make_permutation(std::vector<int> img) {
    int n = static_cast<int>(img.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : img) {
        if (v < 1 || v > n || seen[v])
            fail(errc::invalid_argument, "not a permutation of [n]");
        seen[v] = 1;
    }
    return Permutation{std::move(img)};
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> img;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9')
                fail(errc::invalid_argument, "bad permutation text: " + text);
            img.push_back(c - '0');
        }
    } else {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos != token.size()) fail(errc::invalid_argument, "bad image: " + token);
                img.push_back(v);
            } catch (const error&) {
                throw;
            } catch (const std::exception&) {
                fail(errc::invalid_argument, "bad image: " + token);
            }
        }
    }
    return make_permutation(std::move(img));
}

std::string format_permutation(const Permutation& w) {
    std::string out;
    bool digits = perm_n(w) <= 9;
    for (size_t i = 0; i < w.img.size(); ++i) {
        if (i && !digits) out += ',';
        out += std::to_string(w.img[i]);
    }
    return out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.img.size() != v.img.size()) fail(errc::size_mismatch, "compose");
    Permutation r;
    r.img.resize(u.img.size());
    for (size_t i = 0; i < v.img.size(); ++i) r.img[i] = u.img[v.img[i] - 1];
    return r;
}

Permutation inverse(const Permutation& w) {
    Permutation r;
    r.img.resize(w.img.size());
    for (size_t i = 0; i < w.img.size(); ++i) r.img[w.img[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

Permutation left_mult_simple(const Permutation& w, int j) {
    int n = perm_n(w);
    if (j < 1 || j >= n) fail(errc::index_out_of_range, "simple reflection index");
    Permutation r = w;
    for (int& v : r.img) {
        if (v == j)
            v = j + 1;
        else if (v == j + 1)
            v = j;
    }
    return r;
}

Permutation right_mult_transposition(const Permutation& w, int i, int j) {
    int n = perm_n(w);
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        fail(errc::index_out_of_range, "transposition indices");
    Permutation r = w;
    std::swap(r.img[i - 1], r.img[j - 1]);
    return r;
}

long long perm_length(const Permutation& w) {
    long long count = 0;
    for (size_t i = 0; i < w.img.size(); ++i)
        for (size_t j = i + 1; j < w.img.size(); ++j)
            if (w.img[i] > w.img[j]) ++count;
    return count;
}

std::vector<std::pair<int, int>> perm_inversions(const Permutation& w) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < w.img.size(); ++i)
        for (size_t j = i + 1; j < w.img.size(); ++j)
            if (w.img[i] > w.img[j])
                out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

std::vector<int> lehmer_code(const Permutation& w) {
    int n = perm_n(w);
    std::vector<int> code(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w.img[j] < w.img[i]) ++code[i];
    return code;
}

Permutation from_lehmer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    for (int i = 0; i < n; ++i)
        if (code[i] < 0 || code[i] > n - 1 - i) fail(errc::invalid_code, "entry out of bounds");
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    Permutation w;
    w.img.reserve(n);
    for (int i = 0; i < n; ++i) {
        w.img.push_back(remaining[code[i]]);
        remaining.erase(remaining.begin() + code[i]);
    }
    return w;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.img.size() != w.img.size()) fail(errc::size_mismatch, "bruhat_leq");
    int n = perm_n(v);
    // v <= w iff for every prefix length i, the sorted prefix of v is
    // entrywise <= the sorted prefix of w.
    std::vector<int> pv, pw;
    pv.reserve(n);
    pw.reserve(n);
    for (int i = 0; i < n - 1; ++i) {
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v.img[i]), v.img[i]);
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w.img[i]), w.img[i]);
        for (int k = 0; k <= i; ++k)
            if (pv[k] > pw[k]) return false;
    }
    return true;
}

Permutation longest_element(int n) {
    Permutation w;
    w.img.resize(n);
    for (int i = 0; i < n; ++i) w.img[i] = n - i;
    return w;
}

Permutation w0_young(const Partition& lambda) {
    int n = partition_size(lambda);
    Permutation w = identity_perm(n);
    int start = 0;
    for (int part : lambda.parts) {
        std::reverse(w.img.begin() + start, w.img.begin() + start + part);
        start += part;
    }
    return w;
}

namespace {

void check_sizes(const Permutation& w, const Partition& lambda, const char* what) {
    if (perm_n(w) != partition_size(lambda)) fail(errc::size_mismatch, what);
}

} // namespace

Permutation min_coset_rep(const Permutation& w, const Partition& lambda) {
    check_sizes(w, lambda, "min_coset_rep");
    Permutation inv = inverse(w);
    Permutation rep;
    rep.img.resize(perm_n(w));
    int value = 1;
    for (int part : lambda.parts) {
        std::vector<int> positions(inv.img.begin() + value - 1, inv.img.begin() + value - 1 + part);
        std::sort(positions.begin(), positions.end());
        for (int pos : positions) rep.img[pos - 1] = value++;
    }
    return rep;
}

bool is_min_coset(const Permutation& w, const Partition& lambda) {
    check_sizes(w, lambda, "is_min_coset");
    int n = perm_n(w);
    std::vector<int> sums = partial_sums(lambda);
    Permutation inv = inverse(w);
    size_t next = 0;
    for (int j = 1; j < n; ++j) {
        while (next < sums.size() && sums[next] < j) ++next;
        bool boundary = next < sums.size() && sums[next] == j;
        if (!boundary && inv.img[j - 1] > inv.img[j]) return false;
    }
    return true;
}

std::pair<Permutation, Permutation> parabolic_factor(const Permutation& w,
                                                     const Partition& lambda) {
    Permutation rep = min_coset_rep(w, lambda);
    Permutation young = compose(w, inverse(rep));
    return {young, rep};
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation w = identity_perm(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.img.begin(), w.img.end()));
    return out;
}

std::vector<Permutation> min_coset_reps(const Partition& lambda) {
    int n = partition_size(lambda);
    int ell = partition_length(lambda);
    // Content words with lambda_k copies of letter k, in lexicographic order;
    // each word labels positions by block, and block values are placed in
    // increasing order at their labeled positions.
    std::vector<int> content;
    for (int k = 1; k <= ell; ++k)
        content.insert(content.end(), lambda.parts[k - 1], k);
    std::sort(content.begin(), content.end());
    std::vector<int> starts = partial_sums(lambda);
    std::vector<Permutation> out;
    do {
        std::vector<int> next_value(ell + 1);
        for (int k = 1; k <= ell; ++k) next_value[k] = (k == 1) ? 1 : starts[k - 2] + 1;
        Permutation w;
        w.img.resize(n);
        for (int i = 0; i < n; ++i) w.img[i] = next_value[content[i]]++;
        out.push_back(std::move(w));
    } while (std::next_permutation(content.begin(), content.end()));
    return out;
}

} // namespace rtab
