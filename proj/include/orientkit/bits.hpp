#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace orientkit {

/// Fixed-capacity set of vertex ids backed by 64-bit words.
/// Capacity is the host graph order; one word covers graphs up to 64 vertices.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Removes every member of `o` from this set.
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return next(-1); }

    /// Smallest member greater than `after`, or -1.
    int next(int after) const {
        int i = after + 1;
        if (i >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        std::uint64_t cur = w_[word] >> (i & 63);
        if (cur) return i + std::countr_zero(cur);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return static_cast<int>(word << 6) + std::countr_zero(w_[word]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bits of(int n, const std::vector<int>& members) {
        Bits b(n);
        for (int v : members) b.set(v);
        return b;
    }

    bool operator==(const Bits&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace orientkit
