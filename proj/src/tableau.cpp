#include "rtab/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "rtab/error.hpp"

namespace rtab {

bool is_lattice_word(const std::vector<int>& w) {
    std::vector<int> count;
    for (int letter : w) {
        if (letter < 1) return false;
        if (static_cast<size_t>(letter) > count.size()) {
            if (static_cast<size_t>(letter) != count.size() + 1) return false;
            count.push_back(0);
        }
        if (letter > 1 && count[letter - 1] + 1 > count[letter - 2]) return false;
        ++count[letter - 1];
    }
    return true;
}

StandardTableau tableau_from_word(std::vector<int> w) {
    if (!is_lattice_word(w)) fail(errc::not_lattice_word, format_word(w));
    return StandardTableau{std::move(w)};
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') fail(errc::invalid_argument, "bad word text: " + text);
            w.push_back(c - '0');
        }
    } else {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos != token.size()) fail(errc::invalid_argument, "bad letter: " + token);
                w.push_back(v);
            } catch (const error&) {
                throw;
            } catch (const std::exception&) {
                fail(errc::invalid_argument, "bad letter: " + token);
            }
        }
    }
    return w;
}

std::string format_word(const std::vector<int>& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i && !digits) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

int tableau_size(const StandardTableau& t) { return static_cast<int>(t.word.size()); }

Partition shape(const StandardTableau& t) {
    int rows = t.word.empty() ? 0 : *std::max_element(t.word.begin(), t.word.end());
    std::vector<int> parts(rows, 0);
    for (int r : t.word) ++parts[r - 1];
    return Partition{std::move(parts)};
}

std::vector<std::vector<int>> tableau_rows(const StandardTableau& t) {
    int rows = t.word.empty() ? 0 : *std::max_element(t.word.begin(), t.word.end());
    std::vector<std::vector<int>> out(rows);
    for (size_t j = 0; j < t.word.size(); ++j) out[t.word[j] - 1].push_back(static_cast<int>(j) + 1);
    return out;
}

std::string format_rows(const StandardTableau& t) {
    std::string out;
    for (const auto& row : tableau_rows(t)) {
        if (!out.empty()) out += ',';
        out += '(';
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(row[i]);
        }
        out += ')';
    }
    return out;
}

StandardTableau restrict_tableau(const StandardTableau& t, int j) {
    if (j < 0 || j > tableau_size(t)) fail(errc::index_out_of_range, "restriction index");
    return StandardTableau{std::vector<int>(t.word.begin(), t.word.begin() + j)};
}

StandardTableau delete_largest(const StandardTableau& t) {
    if (t.word.empty()) fail(errc::index_out_of_range, "empty tableau");
    return restrict_tableau(t, tableau_size(t) - 1);
}

StandardTableau concat(const StandardTableau& t, const StandardTableau& u) {
    std::vector<int> w = t.word;
    w.insert(w.end(), u.word.begin(), u.word.end());
    return tableau_from_word(std::move(w));
}

std::vector<int> crop_word(const std::vector<int>& w) {
    std::vector<int> out;
    for (int letter : w)
        if (letter > 1) out.push_back(letter - 1);
    return out;
}

StandardTableau crop(const StandardTableau& t) { return tableau_from_word(crop_word(t.word)); }

std::vector<int> descents(const StandardTableau& t) {
    std::vector<int> out;
    for (size_t j = 0; j + 1 < t.word.size(); ++j)
        if (t.word[j + 1] > t.word[j]) out.push_back(static_cast<int>(j) + 1);
    return out;
}

long long maj(const StandardTableau& t) {
    long long total = 0;
    for (int d : descents(t)) total += d;
    return total;
}

long long sumone(const std::vector<int>& w) {
    long long total = 0;
    for (size_t j = 0; j < w.size(); ++j)
        if (w[j] == 1) total += static_cast<long long>(j);
    return total;
}

namespace {

void extend_syt(const std::vector<int>& parts, std::vector<int>& word, std::vector<int>& count,
                int remaining, std::vector<StandardTableau>& out) {
    if (remaining == 0) {
        out.push_back(StandardTableau{word});
        return;
    }
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i) {
        if (count[i - 1] == parts[i - 1]) continue;
        if (i > 1 && count[i - 1] == count[i - 2]) continue;
        word.push_back(i);
        ++count[i - 1];
        extend_syt(parts, word, count, remaining - 1, out);
        --count[i - 1];
        word.pop_back();
    }
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& sh, int bound) {
    int n = partition_size(sh);
    if (n > bound) fail(errc::size_limit_exceeded, "shape size " + std::to_string(n));
    std::vector<StandardTableau> out;
    std::vector<int> word, count(sh.parts.size(), 0);
    extend_syt(sh.parts, word, count, n, out);
    return out;
}

std::vector<StandardTableau> all_syt_of_size(int n, int bound) {
    std::vector<StandardTableau> out;
    for (const Partition& p : partitions_of(n)) {
        auto batch = enumerate_syt(p, bound);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::pair<StandardTableau, StandardTableau> rs_insert(const Permutation& w) {
    std::vector<std::vector<int>> rows;
    std::vector<int> qword(w.img.size());
    for (size_t k = 0; k < w.img.size(); ++k) {
        int x = w.img[k];
        size_t r = 0;
        while (true) {
            if (r == rows.size()) rows.emplace_back();
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
            if (it == rows[r].end()) {
                rows[r].push_back(x);
                qword[k] = static_cast<int>(r) + 1;
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    std::vector<int> pword(w.img.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int value : rows[r]) pword[value - 1] = static_cast<int>(r) + 1;
    return {tableau_from_word(std::move(pword)), tableau_from_word(std::move(qword))};
}

} // namespace rtab
