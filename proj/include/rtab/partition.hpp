#pragma once

#include <string>
#include <vector>

namespace rtab {

// Integer partition with positive, weakly decreasing parts.
struct Partition {
    std::vector<int> parts;

    bool operator==(const Partition&) const = default;
};

// Validates that parts are positive and weakly decreasing.
Partition make_partition(std::vector<int> parts);

// Accepts comma-separated parts, e.g. "4,2,2". Empty string gives the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

int partition_size(const Partition& p);
int partition_length(const Partition& p);

// n(lambda) = sum of (i-1) * lambda_i. Equals the dimension of the Springer
// fiber over a nilpotent of Jordan type lambda.
long long n_lambda(const Partition& p);

// Partial sums lambda_1, lambda_1+lambda_2, ... (one entry per part).
std::vector<int> partial_sums(const Partition& p);

bool is_partition_vector(const std::vector<int>& parts);

// All partitions of n, largest-first lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

} // namespace rtab
