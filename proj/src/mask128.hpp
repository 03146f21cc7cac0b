#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "risr/reconfig.hpp"

// Internal bitmask state keys for graphs with at most 128 vertices.
namespace risr::mask {

struct Mask128 {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const Mask128&, const Mask128&) = default;
};

struct Mask128Hash {
    size_t operator()(const Mask128& m) const {
        std::uint64_t h = m.lo * 0x9E3779B97F4A7C15ull;
        h ^= m.hi + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

inline void set_bit(Mask128& m, int i) { (i < 64 ? m.lo : m.hi) |= 1ull << (i & 63); }
inline void reset_bit(Mask128& m, int i) { (i < 64 ? m.lo : m.hi) &= ~(1ull << (i & 63)); }
inline bool test_bit(const Mask128& m, int i) { return ((i < 64 ? m.lo : m.hi) >> (i & 63)) & 1u; }
inline int count(const Mask128& m) { return std::popcount(m.lo) + std::popcount(m.hi); }
inline Mask128 and_not(const Mask128& x, const Mask128& y) { return {x.lo & ~y.lo, x.hi & ~y.hi}; }
inline Mask128 intersect(const Mask128& x, const Mask128& y) { return {x.lo & y.lo, x.hi & y.hi}; }
inline Mask128 exclusive(const Mask128& x, const Mask128& y) { return {x.lo ^ y.lo, x.hi ^ y.hi}; }
inline bool any(const Mask128& m) { return m.lo || m.hi; }

template <class F>
inline void for_each_bit(const Mask128& m, F fn) {
    std::uint64_t x = m.lo;
    while (x) {
        fn(std::countr_zero(x));
        x &= x - 1;
    }
    x = m.hi;
    while (x) {
        fn(64 + std::countr_zero(x));
        x &= x - 1;
    }
}

inline int lowest_bit(const Mask128& m) {
    if (m.lo) return std::countr_zero(m.lo);
    return 64 + std::countr_zero(m.hi);
}

inline Mask128 row_of(const Graph& g, Vertex v) {
    Mask128 m;
    const std::uint64_t* r = g.row(v);
    m.lo = r[0];
    if (g.words_per_row() > 1) m.hi = r[1];
    return m;
}

inline Mask128 of_set(const VertexSet& u) {
    Mask128 m;
    for (Vertex v : u) set_bit(m, v);
    return m;
}

inline VertexSet to_set(const Mask128& m) {
    std::vector<Vertex> out;
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return VertexSet(std::move(out));
}

inline Mask128 full_mask(int n) {
    Mask128 m;
    if (n >= 64) {
        m.lo = ~0ull;
        if (n > 64) m.hi = n == 128 ? ~0ull : (1ull << (n - 64)) - 1;
    } else if (n > 0) {
        m.lo = (1ull << n) - 1;
    }
    return m;
}

inline bool is_regular(const Graph& g, const Mask128& u, int d) {
    bool ok = true;
    for_each_bit(u, [&](int v) {
        if (ok && count(intersect(row_of(g, v), u)) != d) ok = false;
    });
    return ok;
}

// Visits every set adjacent to u under the rule, trying each (removed, added)
// pair in lexicographic order. This order is the determinism contract shared
// with the generic set-based path.
template <class F>
inline void for_each_move(const Graph& g, int d, Rule rule, const Mask128& u, const Mask128& full,
                          F emit) {
    for_each_bit(u, [&](int removed) {
        Mask128 candidates = rule == Rule::TS ? and_not(row_of(g, removed), u) : and_not(full, u);
        for_each_bit(candidates, [&](int added) {
            Mask128 next = u;
            reset_bit(next, removed);
            set_bit(next, added);
            if (is_regular(g, next, d)) emit(next);
        });
    });
}

}  // namespace risr::mask
