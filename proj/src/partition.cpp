#include "rtab/partition.hpp"

#include <numeric>
#include <sstream>

#include "rtab/error.hpp"

namespace rtab {

bool is_partition_vector(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

Partition make_partition(std::vector<int> parts) {
    if (!is_partition_vector(parts))
        fail(errc::invalid_argument, "parts must be positive and weakly decreasing");
    return Partition{std::move(parts)};
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos != token.size()) fail(errc::invalid_argument, "bad partition part: " + token);
            parts.push_back(v);
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            fail(errc::invalid_argument, "bad partition part: " + token);
        }
    }
    return make_partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.parts.begin(), p.parts.end(), 0);
}

int partition_length(const Partition& p) { return static_cast<int>(p.parts.size()); }

long long n_lambda(const Partition& p) {
    long long total = 0;
    for (size_t i = 0; i < p.parts.size(); ++i)
        total += static_cast<long long>(i) * p.parts[i];
    return total;
}

std::vector<int> partial_sums(const Partition& p) {
    std::vector<int> sums;
    int acc = 0;
    for (int part : p.parts) {
        acc += part;
        sums.push_back(acc);
    }
    return sums;
}

namespace {

void extend_partitions(std::vector<int>& stack, int remaining, int cap,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{stack});
        return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        stack.push_back(part);
        extend_partitions(stack, remaining - part, part, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail(errc::invalid_argument, "negative size");
    std::vector<Partition> out;
    std::vector<int> stack;
    extend_partitions(stack, n, n, out);
    return out;
}

} // namespace rtab
