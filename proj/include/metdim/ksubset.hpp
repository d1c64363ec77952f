// k-element subsets of {1..n} stored as 64-bit masks (bit i-1 <-> element i).
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace metdim {

struct KSubset {
    std::uint64_t mask = 0;
    int n = 0; // ground size
    int k = 0; // cardinality, always popcount(mask)

    static KSubset from_mask(std::uint64_t mask, int n) {
        if (n < 1 || n > 64)
            throw std::invalid_argument("KSubset: ground size must be in 1..64");
        if (n < 64 && (mask >> n) != 0)
            throw std::invalid_argument("KSubset: mask has bits outside 1.." + std::to_string(n));
        return KSubset{mask, n, std::popcount(mask)};
    }

    static KSubset from_elements(std::span<const int> elems, int n) {
        std::uint64_t m = 0;
        for (int e : elems) {
            if (e < 1 || e > n)
                throw std::invalid_argument("KSubset: element " + std::to_string(e) +
                                            " outside 1.." + std::to_string(n));
            if (m & (std::uint64_t{1} << (e - 1)))
                throw std::invalid_argument("KSubset: duplicate element " + std::to_string(e));
            m |= std::uint64_t{1} << (e - 1);
        }
        return from_mask(m, n);
    }

    static KSubset of(std::initializer_list<int> elems, int n) {
        return from_elements(std::span<const int>(elems.begin(), elems.size()), n);
    }

    bool contains(int e) const { return e >= 1 && e <= n && (mask >> (e - 1)) & 1; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(k);
        std::uint64_t m = mask;
        while (m) {
            out.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        return out;
    }

    friend bool operator==(const KSubset& a, const KSubset& b) {
        return a.mask == b.mask && a.n == b.n;
    }
};

inline int intersection_size(const KSubset& a, const KSubset& b) {
    return std::popcount(a.mask & b.mask);
}

} // namespace metdim
