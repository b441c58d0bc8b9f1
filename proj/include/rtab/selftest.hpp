#pragma once

#include <string>

namespace rtab {

struct SelftestResult {
    int passed = 0;
    int failed = 0;
    std::string report;
};

// Runs every invariant suite with enumeration sweeps capped at max_n.
SelftestResult selftest(int max_n = 8);

} // namespace rtab
