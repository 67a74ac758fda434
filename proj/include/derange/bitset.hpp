#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace derange {

// Fixed-length bitset sized at runtime; used for adjacency rows and for the
// vertex sets of the independent-set search.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    // this ⊆ other
    bool subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
        return *this;
    }

    // this &= ~other
    void subtract(const Bitset& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
    }

    int find_first() const { return find_next(-1); }

    // smallest set index > i, or -1
    int find_next(int i) const {
        int word = (i + 1) >> 6;
        if (word >= static_cast<int>(w_.size())) return -1;
        std::uint64_t cur = w_[word] & (~std::uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (cur) return (word << 6) + std::countr_zero(cur);
            if (++word >= static_cast<int>(w_.size())) return -1;
            cur = w_[word];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace derange
