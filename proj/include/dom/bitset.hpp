#ifndef DOM_BITSET_HPP
#define DOM_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace dom {

// Dynamic fixed-width bitset over 64-bit words. Universe size is set at
// construction; bits past `size()` in the last word stay zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0ULL) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    void set_all() {
        for (auto& w : w_) w = ~0ULL;
        trim();
    }
    void clear() {
        for (auto& w : w_) w = 0ULL;
    }

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

    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    // |this & ~mask|
    int count_andnot(const Bitset& mask) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~mask.w_[i]);
        return c;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    // Set bits of this & ~mask, ascending.
    std::vector<int> minus(const Bitset& mask) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i] & ~mask.w_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    void trim() {
        if (w_.empty()) return;
        int r = nbits_ & 63;
        if (r) w_.back() &= (1ULL << r) - 1ULL;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace dom

#endif
