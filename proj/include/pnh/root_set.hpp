#pragma once

// Fixed-width bitsets over positive-root indices, and flats keyed by them.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace pnh {

inline constexpr int kMaxPositiveRoots = 128;

class RootSet {
public:
    constexpr RootSet() = default;

    static RootSet single(int k) {
        RootSet s;
        s.set(k);
        return s;
    }

    void set(int k) { w_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    void reset(int k) { w_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }
    bool test(int k) const { return (w_[k >> 6] >> (k & 63)) & 1U; }
    int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    bool subset_of(const RootSet& o) const { return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0; }
    bool intersects(const RootSet& o) const { return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0; }

    RootSet& operator|=(const RootSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    RootSet& operator&=(const RootSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }

    /// Indices of the set bits in increasing order.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int part = 0; part < 2; ++part) {
            std::uint64_t w = w_[part];
            while (w != 0) {
                out.push_back(part * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const RootSet&, const RootSet&) = default;
    // Orders by the bit pattern read from the lowest root index upwards.
    friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
        for (int part = 0; part < 2; ++part) {
            const std::uint64_t diff = a.w_[part] ^ b.w_[part];
            if (diff == 0) continue;
            const std::uint64_t low = diff & (~diff + 1);
            return (a.w_[part] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const { return std::hash<std::uint64_t>{}(w_[0] * 0x9e3779b97f4a7c15ULL ^ w_[1]); }

private:
    std::uint64_t w_[2] = {0, 0};
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

/// A subspace spanned by roots, identified with the positive roots it contains.
struct Flat {
    RootSet roots;
    int dim = 0;

    friend bool operator==(const Flat& a, const Flat& b) { return a.roots == b.roots; }
    friend std::strong_ordering operator<=>(const Flat& a, const Flat& b) {
        if (auto c = a.dim <=> b.dim; c != 0) return c;
        return a.roots <=> b.roots;
    }
};

struct FlatHash {
    std::size_t operator()(const Flat& f) const { return f.roots.hash(); }
};

}  // namespace pnh
