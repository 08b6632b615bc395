#include "freewitt/partitions.hpp"

#include "freewitt/errors.hpp"

namespace freewitt {

namespace {

constexpr int kMaxPartitionSize = 12;

// Label-based crossing test over the restricted growth string prefix.
bool crossing_labels(const std::vector<int>& label) {
    const int n = static_cast<int>(label.size());
    for (int p1 = 0; p1 < n; ++p1) {
        for (int q1 = p1 + 1; q1 < n; ++q1) {
            if (label[q1] == label[p1]) continue;
            for (int p2 = q1 + 1; p2 < n; ++p2) {
                if (label[p2] != label[p1]) continue;
                for (int q2 = p2 + 1; q2 < n; ++q2) {
                    if (label[q2] == label[q1]) return true;
                }
            }
        }
    }
    return false;
}

NCPartition from_labels(const std::vector<int>& label, int blocks) {
    NCPartition p;
    p.blocks.resize(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < label.size(); ++i) p.blocks[label[i]].push_back(static_cast<int>(i) + 1);
    return p;
}

void extend(std::vector<int>& label, int used, int n, PartitionMode mode, std::vector<NCPartition>& out) {
    if (static_cast<int>(label.size()) == n) {
        out.push_back(from_labels(label, used));
        return;
    }
    for (int b = 0; b <= used; ++b) {
        label.push_back(b);
        if (mode == PartitionMode::all || !crossing_labels(label)) {
            extend(label, b == used ? used + 1 : used, n, mode, out);
        }
        label.pop_back();
    }
}

} // namespace

int NCPartition::size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

bool is_crossing(const NCPartition& p) {
    std::vector<int> label(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (int e : p.blocks[b]) {
            if (e < 1 || e > static_cast<int>(label.size()) || label[e - 1] != -1) {
                throw DomainError("InvalidPartition", "blocks must partition {1..n}");
            }
            label[e - 1] = static_cast<int>(b);
        }
    }
    return crossing_labels(label);
}

std::vector<NCPartition> enumerate_partitions(int n, PartitionMode mode) {
    if (n < 0 || n > kMaxPartitionSize) {
        throw DomainError("TooLarge", "partition enumeration is limited to 0 <= n <= 12");
    }
    std::vector<NCPartition> out;
    std::vector<int> label;
    extend(label, 0, n, mode, out);
    return out;
}

} // namespace freewitt
