#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace cyclespec {

inline constexpr int kMaxOrder = 128;

// Fixed-width set of vertex indices in [0, 128).
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet first(int count) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (count >= lo + 64) s.words_[w] = ~std::uint64_t{0};
            else if (count > lo) s.words_[w] = (std::uint64_t{1} << (count - lo)) - 1;
        }
        return s;
    }
    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    constexpr bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
    constexpr bool any() const { return !empty(); }

    // Lowest member, or -1 when empty.
    constexpr int front() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }
    constexpr int pop_front() {
        const int v = front();
        if (v >= 0) erase(v);
        return v;
    }

    // Members strictly greater than v.
    constexpr VertexSet above(int v) const {
        VertexSet s = *this;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (v >= lo + 63) s.words_[w] = 0;
            else if (v >= lo) s.words_[w] &= ~std::uint64_t{0} << (v - lo + 1);
        }
        return s;
    }

    constexpr VertexSet operator&(const VertexSet& o) const { return {words_[0] & o.words_[0], words_[1] & o.words_[1]}; }
    constexpr VertexSet operator|(const VertexSet& o) const { return {words_[0] | o.words_[0], words_[1] | o.words_[1]}; }
    constexpr VertexSet operator^(const VertexSet& o) const { return {words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]}; }
    constexpr VertexSet minus(const VertexSet& o) const { return {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]}; }
    constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool intersects(const VertexSet& o) const {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }
    constexpr bool subset_of(const VertexSet& o) const { return minus(o).empty(); }

    constexpr std::uint64_t word(int w) const { return words_[w]; }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

private:
    static constexpr int kWords = 2;
    constexpr VertexSet(std::uint64_t a, std::uint64_t b) : words_{a, b} {}
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace cyclespec
