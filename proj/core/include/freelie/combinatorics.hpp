#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace freelie {

/// Ordered set partitions of `elems` into nonempty blocks; each block keeps
/// the relative (increasing, if `elems` is sorted) order of its elements.
/// Visits the empty partition when `elems` is empty.
template <class T>
void for_each_ordered_set_partition(const std::vector<T>& elems,
                                    const std::function<void(const std::vector<std::vector<T>>&)>& visit) {
    std::vector<std::vector<T>> blocks;
    // Choose the first block as a nonempty subset (bitmask over remaining),
    // then recurse on the rest.
    std::function<void(const std::vector<T>&)> go = [&](const std::vector<T>& rest) {
        if (rest.empty()) {
            visit(blocks);
            return;
        }
        const std::size_t n = rest.size();
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            std::vector<T> block, remaining;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1ull << i))
                    block.push_back(rest[i]);
                else
                    remaining.push_back(rest[i]);
            }
            blocks.push_back(std::move(block));
            go(remaining);
            blocks.pop_back();
        }
    };
    go(elems);
}

/// Unordered set partitions of `elems` into nonempty blocks, canonically
/// labeled: blocks ordered by their minimum, elements increasing within a
/// block (assuming `elems` sorted). Visits the empty partition for empty input.
template <class T>
void for_each_set_partition(const std::vector<T>& elems,
                            const std::function<void(const std::vector<std::vector<T>>&)>& visit) {
    std::vector<std::vector<T>> blocks;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == elems.size()) {
            visit(blocks);
            return;
        }
        for (auto& b : blocks) {
            b.push_back(elems[i]);
            go(i + 1);
            b.pop_back();
        }
        blocks.push_back({elems[i]});
        go(i + 1);
        blocks.pop_back();
    };
    go(0);
}

/// All permutations of {1,...,n} in lexicographic order (one-line notation).
inline std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace freelie
