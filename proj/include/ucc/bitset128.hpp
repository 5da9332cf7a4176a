// bitset128.hpp -- fixed 128-bit set with value ordering and hashing.
// Wide enough for every universe/vertex set this toolkit handles (<= 128).
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ucc {

struct Bitset128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int capacity = 128;

    static constexpr Bitset128 single(int b) {
        Bitset128 m;
        m.set(b);
        return m;
    }

    // mask with bits 0..n-1 set
    static constexpr Bitset128 first_n(int n) {
        Bitset128 m;
        if (n >= 128) {
            m.lo = ~0ull;
            m.hi = ~0ull;
        } else if (n > 64) {
            m.lo = ~0ull;
            m.hi = (1ull << (n - 64)) - 1;
        } else if (n == 64) {
            m.lo = ~0ull;
        } else if (n > 0) {
            m.lo = (1ull << n) - 1;
        }
        return m;
    }

    constexpr void set(int b) {
        if (b < 64)
            lo |= 1ull << b;
        else
            hi |= 1ull << (b - 64);
    }
    constexpr void reset(int b) {
        if (b < 64)
            lo &= ~(1ull << b);
        else
            hi &= ~(1ull << (b - 64));
    }
    constexpr bool test(int b) const {
        return b < 64 ? (lo >> b) & 1 : (hi >> (b - 64)) & 1;
    }

    constexpr bool any() const { return lo | hi; }
    constexpr bool none() const { return !(lo | hi); }
    int count() const { return std::popcount(lo) + std::popcount(hi); }

    // index of the lowest set bit, -1 when empty
    int lowest() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    // removes and returns the lowest set bit; undefined on empty
    int pop_lowest() {
        if (lo) {
            int b = std::countr_zero(lo);
            lo &= lo - 1;
            return b;
        }
        int b = std::countr_zero(hi);
        hi &= hi - 1;
        return 64 + b;
    }

    friend constexpr Bitset128 operator|(Bitset128 a, Bitset128 b) {
        return {a.lo | b.lo, a.hi | b.hi};
    }
    friend constexpr Bitset128 operator&(Bitset128 a, Bitset128 b) {
        return {a.lo & b.lo, a.hi & b.hi};
    }
    friend constexpr Bitset128 operator^(Bitset128 a, Bitset128 b) {
        return {a.lo ^ b.lo, a.hi ^ b.hi};
    }
    constexpr Bitset128 operator~() const { return {~lo, ~hi}; }
    Bitset128& operator|=(Bitset128 o) {
        lo |= o.lo;
        hi |= o.hi;
        return *this;
    }
    Bitset128& operator&=(Bitset128 o) {
        lo &= o.lo;
        hi &= o.hi;
        return *this;
    }

    constexpr bool operator==(const Bitset128&) const = default;

    // numeric value order; "lexicographic bitset order" everywhere in this project
    constexpr bool operator<(const Bitset128& o) const {
        return hi != o.hi ? hi < o.hi : lo < o.lo;
    }

    constexpr bool is_subset_of(Bitset128 o) const {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }
    constexpr bool intersects(Bitset128 o) const {
        return (lo & o.lo) | (hi & o.hi);
    }
};

struct Bitset128Hash {
    std::size_t operator()(const Bitset128& m) const {
        std::uint64_t h = m.lo * 0x9e3779b97f4a7c15ull;
        h ^= (m.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }
};

using Mask = Bitset128;

}  // namespace ucc
