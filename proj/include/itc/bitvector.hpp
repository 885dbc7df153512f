#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace itc {

/// Dense GF(2) vector packed into 64-bit words. Bits past size() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t n, std::span<const std::size_t> ones) {
        BitVector v(n);
        for (std::size_t i : ones) v.flip(i);
        return v;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t num_words() const noexcept { return words_.size(); }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::uint64_t* data() noexcept { return words_.data(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool operator[](std::size_t i) const { return get(i); }

    BitVector& operator^=(const BitVector& other) {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    /// XOR a vector that is no longer than this one into the low bits.
    void xor_prefix(const BitVector& shorter) {
        if (shorter.n_ > n_) throw std::invalid_argument("BitVector::xor_prefix: operand too long");
        for (std::size_t w = 0; w < shorter.words_.size(); ++w) words_[w] ^= shorter.words_[w];
    }

    BitVector& operator&=(const BitVector& other) {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    bool dot(const BitVector& other) const {
        check_same(other);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_one() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return n_;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    /// Grows or shrinks; bits beyond the new size are dropped.
    void resize(std::size_t n) {
        words_.resize((n + 63) / 64, 0);
        n_ = n;
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    /// Concatenation [this | tail].
    BitVector concat(const BitVector& tail) const {
        BitVector out(n_ + tail.n_);
        for (auto i : ones()) out.set(i);
        for (auto i : tail.ones()) out.set(n_ + i);
        return out;
    }
    BitVector slice(std::size_t begin, std::size_t count) const {
        BitVector out(count);
        for (std::size_t i = 0; i < count; ++i)
            if (get(begin + i)) out.set(i);
        return out;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

private:
    void check_same(const BitVector& other) const {
        if (other.n_ != n_) throw std::invalid_argument("BitVector size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace itc
