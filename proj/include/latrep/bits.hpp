#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latrep {

// Subsets of up to 64 indexed objects (lattice elements, ground points,
// Stone points) are stored as bitmasks, bit i = object with index i.
using mask_t = std::uint64_t;

inline constexpr int max_mask_bits = 64;

inline constexpr mask_t bit(int i) { return mask_t{1} << i; }

inline constexpr bool has_bit(mask_t m, int i) { return (m >> i) & 1u; }

inline constexpr mask_t full_mask(int n) {
    return n >= max_mask_bits ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

inline int popcount(mask_t m) { return std::popcount(m); }

inline int lowest_bit(mask_t m) { return std::countr_zero(m); }

inline int highest_bit(mask_t m) { return 63 - std::countl_zero(m); }

inline constexpr bool subset(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline std::vector<int> mask_to_indices(mask_t m) {
    std::vector<int> out;
    while (m) {
        int i = lowest_bit(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

inline mask_t indices_to_mask(const std::vector<int>& idx) {
    mask_t m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

}  // namespace latrep
