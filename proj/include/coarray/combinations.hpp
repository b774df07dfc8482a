#pragma once

#include <span>
#include <vector>

namespace coarray {

/// Advances idx (a strictly increasing k-subset of {0..n-1}) to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<int> idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            int v = ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = ++v;
            return true;
        }
    }
    return false;
}

/// Calls f(span of k indices) for every k-subset of {0..n-1} in lexicographic
/// order. k = 0 yields a single empty call; k > n yields none.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
        f(std::span<const int>(idx));
    } while (next_combination(idx, n));
}

}  // namespace coarray
