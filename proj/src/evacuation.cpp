#include "rtab/evacuation.hpp"

#include <algorithm>

#include "rtab/error.hpp"

namespace rtab {

EvacuationTrace evacuate(const StandardTableau& t) {
    int n = tableau_size(t);
    std::vector<std::vector<int>> grid = tableau_rows(t);
    std::vector<int> result_word(n);
    EvacuationTrace trace;
    for (int j = 1; j <= n; ++j) {
        size_t r = 0, c = 0;
        SlidePath path;
        path.cells.emplace_back(1, 1);
        while (true) {
            bool has_right = c + 1 < grid[r].size();
            bool has_below = r + 1 < grid.size() && c < grid[r + 1].size();
            if (!has_right && !has_below) break;
            bool go_below;
            if (!has_right)
                go_below = true;
            else if (!has_below)
                go_below = false;
            else
                go_below = grid[r + 1][c] < grid[r][c + 1];
            if (go_below) {
                grid[r][c] = grid[r + 1][c];
                ++r;
            } else {
                grid[r][c] = grid[r][c + 1];
                ++c;
            }
            path.cells.emplace_back(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
        }
        result_word[n - j] = static_cast<int>(r) + 1;
        grid[r].pop_back();
        while (!grid.empty() && grid.back().empty()) grid.pop_back();
        trace.paths.push_back(std::move(path));
    }
    trace.result = tableau_from_word(std::move(result_word));
    return trace;
}

bool is_L_slide(const SlidePath& path) {
    bool went_right = false;
    for (size_t k = 1; k < path.cells.size(); ++k) {
        bool right = path.cells[k].second > path.cells[k - 1].second;
        if (right)
            went_right = true;
        else if (went_right)
            return false;
    }
    return true;
}

bool all_slides_L(const StandardTableau& t) {
    EvacuationTrace trace = evacuate(t);
    return std::all_of(trace.paths.begin(), trace.paths.end(), is_L_slide);
}

std::pair<StandardTableau, SlidePath> first_slide(const StandardTableau& t) {
    if (t.word.empty()) fail(errc::index_out_of_range, "empty tableau");
    std::vector<std::vector<int>> grid = tableau_rows(t);
    size_t r = 0, c = 0;
    SlidePath path;
    path.cells.emplace_back(1, 1);
    while (true) {
        bool has_right = c + 1 < grid[r].size();
        bool has_below = r + 1 < grid.size() && c < grid[r + 1].size();
        if (!has_right && !has_below) break;
        bool go_below = !has_right || (has_below && grid[r + 1][c] < grid[r][c + 1]);
        if (go_below) {
            grid[r][c] = grid[r + 1][c];
            ++r;
        } else {
            grid[r][c] = grid[r][c + 1];
            ++c;
        }
        path.cells.emplace_back(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    }
    grid[r].pop_back();
    std::vector<int> word(t.word.size() - 1);
    for (size_t row = 0; row < grid.size(); ++row)
        for (int value : grid[row]) word[value - 2] = static_cast<int>(row) + 1;
    return {tableau_from_word(std::move(word)), std::move(path)};
}

std::vector<int> slide_row_columns(const SlidePath& path) {
    std::vector<int> out;
    for (const auto& [r, c] : path.cells) {
        if (static_cast<size_t>(r) > out.size()) out.resize(r, 0);
        out[r - 1] = std::max(out[r - 1], c);
    }
    return out;
}

} // namespace rtab
