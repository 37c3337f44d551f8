#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tutteconv {

// Subsets of a ground set of at most 24 elements, as bitmasks.
using Mask = std::uint32_t;

constexpr int kGroundCapLimit = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

// Visits every subset of `m`, including 0 and m itself.
template <typename F>
void for_each_subset(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

// Index of a subset of `within` in the compressed universe formed by the
// elements of `within` taken in increasing order.
inline Mask compress(Mask sub, Mask within) {
    Mask out = 0;
    int j = 0;
    for (int i = 0; within >> i; ++i) {
        if (contains(within, i)) {
            if (contains(sub, i)) out |= bit(j);
            ++j;
        }
    }
    return out;
}

// Inverse of compress: maps a mask over the compressed universe back.
inline Mask embed(Mask sub, Mask within) {
    Mask out = 0;
    int j = 0;
    for (int i = 0; within >> i; ++i) {
        if (contains(within, i)) {
            if (contains(sub, j)) out |= bit(i);
            ++j;
        }
    }
    return out;
}

}  // namespace tutteconv
