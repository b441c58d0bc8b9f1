#pragma once

#include <utility>
#include <vector>

#include "rtab/tableau.hpp"

namespace rtab {

// Path of the empty box during one evacuation slide, as (row, column) pairs,
// 1-indexed, starting at (1,1). Consecutive cells differ by one step right or
// down.
struct SlidePath {
    std::vector<std::pair<int, int>> cells;

    bool operator==(const SlidePath&) const = default;
};

struct EvacuationTrace {
    StandardTableau result;
    std::vector<SlidePath> paths;
};

// Schuetzenberger evacuation. paths[j-1] records the slide performed after
// deleting entry j. The empty box always moves toward the lesser of the
// entries to its right and below; ties cannot occur in a standard tableau.
EvacuationTrace evacuate(const StandardTableau& t);

// True when the path goes down the first column and then right along one row,
// with no interleaving.
bool is_L_slide(const SlidePath& path);

bool all_slides_L(const StandardTableau& t);

// For i = 1..r, the largest column the path occupies in row i, where r is the
// last row the path reaches.
std::vector<int> slide_row_columns(const SlidePath& path);

// Deletes entry 1, performs one slide, decrements every entry, and reports
// the slide path.
std::pair<StandardTableau, SlidePath> first_slide(const StandardTableau& t);

} // namespace rtab
