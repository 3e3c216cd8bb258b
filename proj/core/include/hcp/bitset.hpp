#ifndef HCP_BITSET_HPP
#define HCP_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hcp/error.hpp"

namespace hcp {

/// Applies the bit permutation b -> b ^ mask inside one 64-bit word
/// (mask < 64), as a sequence of butterfly swaps.
inline uint64_t xor_shuffle_word(uint64_t x, uint32_t mask) {
    // A_b = positions whose bit b is clear.
    static constexpr uint64_t kHalf[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (int b = 0; b < 6; ++b) {
        if (mask & (1u << b)) {
            const int d = 1 << b;
            x = ((x & kHalf[b]) << d) | ((x >> d) & kHalf[b]);
        }
    }
    return x;
}

/// A fixed-size bitset over the vertex index space [0, 2^index_bits).
///
/// The interesting operation is xor_shift: out[i] = in[i ^ mask], the
/// vertex permutation induced by translating the cube by a fixed word.
/// Bits beyond 2^index_bits (possible only when index_bits < 6) stay zero.
class VertexBitset {
  public:
    explicit VertexBitset(int index_bits)
        : index_bits_(index_bits),
          words_((index_bits >= 6) ? (size_t{1} << (index_bits - 6)) : 1, 0) {
        if (index_bits < 0 || index_bits > 30)
            throw ArgumentError("index_bits must be in [0,30]");
    }

    int index_bits() const { return index_bits_; }
    uint64_t size() const { return uint64_t{1} << index_bits_; }

    void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(uint64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void reset() { std::fill(words_.begin(), words_.end(), uint64_t{0}); }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    VertexBitset& operator|=(const VertexBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexBitset& operator&=(const VertexBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// this &= ~o
    VertexBitset& subtract(const VertexBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    /// Flips every bit of the vertex domain.
    VertexBitset& complement() {
        if (index_bits_ >= 6) {
            for (uint64_t& w : words_) w = ~w;
        } else {
            words_[0] = ~words_[0] & ((uint64_t{1} << size()) - 1);
        }
        return *this;
    }

    bool operator==(const VertexBitset& o) const = default;

    bool intersects(const VertexBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lowest index present in both sets, if any.
    std::optional<uint64_t> first_common(const VertexBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            const uint64_t w = words_[i] & o.words_[i];
            if (w) return (uint64_t{i} << 6) + std::countr_zero(w);
        }
        return std::nullopt;
    }

    std::optional<uint64_t> find_first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (uint64_t{i} << 6) + std::countr_zero(words_[i]);
        return std::nullopt;
    }

    /// out[i] = this[i ^ mask]; mask must lie in the index space.
    void xor_shift_into(uint32_t mask, VertexBitset& out) const {
        const uint32_t hi = mask >> 6;
        const uint32_t lo = mask & 63;
        const size_t n = words_.size();
        for (size_t w = 0; w < n; ++w) out.words_[w] = xor_shuffle_word(words_[w ^ hi], lo);
    }

    VertexBitset xor_shift(uint32_t mask) const {
        VertexBitset out(index_bits_);
        xor_shift_into(mask, out);
        return out;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                fn((uint64_t{i} << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> mutable_words() { return words_; }

  private:
    int index_bits_;
    std::vector<uint64_t> words_;
};

}  // namespace hcp

#endif
