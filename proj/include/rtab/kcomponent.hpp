#pragma once

#include <vector>

#include "rtab/tableau.hpp"

namespace rtab {

// Dual tableau of the component attached to a 2-coloring of [n] by the subset
// I: each row collects the smallest remaining element together with every
// remaining element whose predecessor among the remaining elements has the
// other color. ElementOutOfRange unless I is a subset of [n].
StandardTableau k_component_dual(const std::vector<int>& subset, int n);

// The component tableau itself: the evacuation of k_component_dual.
StandardTableau k_component_tableau(const std::vector<int>& subset, int n);

} // namespace rtab
