#pragma once

#include <functional>
#include <vector>

#include "ptdt/partition.hpp"

namespace ptdt::testing {

// Partitions of exactly n with parts <= max_part, by plain recursion.
inline std::vector<Partition> partitions_of(int n, int max_part = 1 << 20) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

// Partitions fitting in a rows × cols box.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int cap) {
        out.emplace_back(cur);
        if (row == rows) return;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

}  // namespace ptdt::testing
