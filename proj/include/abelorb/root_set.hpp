#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace abelorb {

/// Subset of positive-root indices, stored as a fixed 256-bit mask.
///
/// Every root system built by this library has at most kCapacity positive
/// roots (checked at construction), so sets are plain values that hash,
/// compare and combine without allocation.
class RootSet {
public:
    static constexpr int kCapacity = 256;
    static constexpr int kWords = kCapacity / 64;

    constexpr RootSet() = default;

    static RootSet of(std::initializer_list<int> indices) {
        RootSet s;
        for (int i : indices) s.insert(i);
        return s;
    }
    template <typename Range>
    static RootSet from(const Range& indices) {
        RootSet s;
        for (int i : indices) s.insert(static_cast<int>(i));
        return s;
    }
    /// {0, ..., n-1}
    static RootSet first(int n) {
        RootSet s;
        for (int i = 0; i < n; ++i) s.insert(i);
        return s;
    }

    void insert(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool contains(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    [[nodiscard]] int size() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Smallest member, or -1 when empty.
    [[nodiscard]] int front() const {
        for (int k = 0; k < kWords; ++k)
            if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
        return -1;
    }

    [[nodiscard]] bool intersects(const RootSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    [[nodiscard]] bool subset_of(const RootSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    RootSet& operator|=(const RootSet& o) {
        for (int k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
        return *this;
    }
    RootSet& operator&=(const RootSet& o) {
        for (int k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
        return *this;
    }
    RootSet& operator-=(const RootSet& o) {
        for (int k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

    friend bool operator==(const RootSet&, const RootSet&) = default;

    /// Members in increasing order.
    [[nodiscard]] std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int k = 0; k < kWords; ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order on sets: by size, then by the increasing index sequence.
bool canonical_less(const RootSet& a, const RootSet& b);

}  // namespace abelorb

template <>
struct std::hash<abelorb::RootSet> {
    std::size_t operator()(const abelorb::RootSet& s) const noexcept { return s.hash(); }
};
