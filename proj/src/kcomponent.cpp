#include "rtab/kcomponent.hpp"

#include <set>

#include "rtab/error.hpp"
#include "rtab/evacuation.hpp"

namespace rtab {

StandardTableau k_component_dual(const std::vector<int>& subset, int n) {
    if (n < 0) fail(errc::invalid_argument, "negative n");
    std::set<int> black;
    for (int i : subset) {
        if (i < 1 || i > n) fail(errc::element_out_of_range, std::to_string(i));
        black.insert(i);
    }
    std::vector<int> word(n, 0);
    std::vector<int> remaining;
    for (int i = 1; i <= n; ++i) remaining.push_back(i);
    int row = 0;
    while (!remaining.empty()) {
        ++row;
        std::vector<int> rest;
        for (size_t k = 0; k < remaining.size(); ++k) {
            bool take = k == 0 || black.count(remaining[k - 1]) != black.count(remaining[k]);
            if (take)
                word[remaining[k] - 1] = row;
            else
                rest.push_back(remaining[k]);
        }
        remaining = std::move(rest);
    }
    return tableau_from_word(std::move(word));
}

StandardTableau k_component_tableau(const std::vector<int>& subset, int n) {
    return evacuate(k_component_dual(subset, n)).result;
}

} // namespace rtab
