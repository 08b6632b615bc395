#pragma once

#include <vector>

namespace freewitt {

// Set partition of {1..n}; blocks sorted internally and by first element.
struct NCPartition {
    std::vector<std::vector<int>> blocks;

    int size() const;
    friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

enum class PartitionMode { all, noncrossing };

// True iff some p1 < q1 < p2 < q2 has p1 ~ p2, q1 ~ q2 in distinct blocks.
bool is_crossing(const NCPartition& p);

// Exhaustive, duplicate-free enumeration in restricted-growth-string order.
// Non-crossing mode prunes crossing prefixes. n <= 12.
std::vector<NCPartition> enumerate_partitions(int n, PartitionMode mode);

} // namespace freewitt
