#pragma once

// Slow reference implementations and helpers used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rtab/error.hpp"

namespace oracles {

// Bruhat order computed by closing the covering relation downward, with no
// reliance on the dominance criterion used by the library.
class CoverClosure {
public:
    explicit CoverClosure(int n) {
        std::vector<int> base(n);
        for (int i = 0; i < n; i++) base[i] = i + 1;
        std::vector<std::vector<int>> perms;
        if (n > 0) {
            do {
                perms.push_back(base);
            } while (std::next_permutation(base.begin(), base.end()));
        } else {
            perms.push_back({});
        }
        std::stable_sort(perms.begin(), perms.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             return inversions(a) < inversions(b);
                         });
        words_ = (perms.size() + 63) / 64;
        below_.assign(perms.size(), std::vector<uint64_t>(words_, 0));
        for (size_t idx = 0; idx < perms.size(); idx++) {
            index_[perms[idx]] = idx;
            below_[idx][idx >> 6] |= uint64_t(1) << (idx & 63);
            long long len = inversions(perms[idx]);
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++) {
                    std::vector<int> u = perms[idx];
                    std::swap(u[i], u[j]);
                    if (inversions(u) != len - 1) continue;
                    const auto& src = below_[index_.at(u)];
                    auto& dst = below_[idx];
                    for (size_t k = 0; k < words_; k++) dst[k] |= src[k];
                }
            }
        }
    }

    bool leq(const std::vector<int>& v, const std::vector<int>& w) const {
        size_t iv = index_.at(v);
        size_t iw = index_.at(w);
        return (below_[iw][iv >> 6] >> (iv & 63)) & 1;
    }

private:
    static long long inversions(const std::vector<int>& p) {
        long long count = 0;
        for (size_t i = 0; i < p.size(); i++)
            for (size_t j = i + 1; j < p.size(); j++)
                if (p[i] > p[j]) count++;
        return count;
    }

    size_t words_ = 0;
    std::map<std::vector<int>, size_t> index_;
    std::vector<std::vector<uint64_t>> below_;
};

// Runs f and reports the library error code it throws, if any.
template <class F>
std::optional<rtab::errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const rtab::error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace oracles
