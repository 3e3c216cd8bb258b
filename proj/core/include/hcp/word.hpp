#ifndef HCP_WORD_HPP
#define HCP_WORD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcp/error.hpp"

namespace hcp {

/// A binary word of length n, 1 <= n <= 32.
///
/// Textual position 1 is the leftmost character; position i is stored at
/// bit n-i, so the textual word read as a binary numeral equals bits().
/// Words are immutable values.
class Word {
  public:
    Word() = default;

    Word(uint32_t bits, int length) : bits_(bits), length_(length) {
        if (length < 1 || length > 32)
            throw ArgumentError("word length must be in [1,32], got " + std::to_string(length));
        if (length < 32 && (bits >> length) != 0)
            throw ArgumentError("word has bits beyond its length");
    }

    static Word zero(int length) { return Word(0, length); }

    static Word all_ones(int length) {
        return Word(length == 32 ? ~uint32_t{0} : ((uint32_t{1} << length) - 1), length);
    }

    /// Parses exactly n characters '0'/'1', position 1 first.
    static Word parse(std::string_view text);

    uint32_t bits() const { return bits_; }
    int length() const { return length_; }

    int weight() const { return std::popcount(bits_); }
    int parity() const { return weight() & 1; }

    /// Value of the coordinate at textual position pos (1-based).
    bool at_position(int pos) const {
        if (pos < 1 || pos > length_) throw ArgumentError("position out of range");
        return (bits_ >> (length_ - pos)) & 1u;
    }

    /// Word with a one exactly at textual position pos.
    static Word unit(int pos, int length) {
        if (pos < 1 || pos > length) throw ArgumentError("position out of range");
        return Word(uint32_t{1} << (length - pos), length);
    }

    Word operator^(Word other) const {
        if (length_ != other.length_)
            throw ArgumentError("length mismatch: " + std::to_string(length_) + " vs " +
                                std::to_string(other.length_));
        return Word(bits_ ^ other.bits_, length_);
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;  // orders by length, then numeric value

    std::string to_string() const;

  private:
    uint32_t bits_ = 0;
    int length_ = 1;
};

/// Hamming distance; throws ArgumentError on length mismatch.
inline int distance(Word u, Word v) { return (u ^ v).weight(); }

/// The n words at distance 1 from v, in position order 1..n.
std::vector<Word> neighbors_h1(Word v);

/// The n(n-1)/2 words at distance 2 from v, in lexicographic position-pair order.
std::vector<Word> neighbors_h2(Word v);

/// Index of a word within one halved-cube component.
///
/// The last textual coordinate (bit 0) is dropped; it is recoverable from
/// the component's weight parity, so value <-> word is a bijection within
/// a parity class.
struct CompactIndex {
    uint32_t value = 0;  // (n-1)-bit value, positions 1..n-1
    int parity = 0;      // weight of the full word mod 2

    bool operator==(const CompactIndex&) const = default;
};

inline CompactIndex encode_compact(Word v) { return CompactIndex{v.bits() >> 1, v.parity()}; }

inline Word decode_compact(CompactIndex ci, int n) {
    if (n < 1 || n > 32) throw ArgumentError("word length must be in [1,32]");
    if (n == 1 ? ci.value != 0 : (ci.value >> (n - 1)) != 0)
        throw ArgumentError("compact index out of range for length " + std::to_string(n));
    uint32_t bits = ci.value << 1;
    if ((std::popcount(bits) & 1) != (ci.parity & 1)) bits |= 1u;
    return Word(bits, n);
}

}  // namespace hcp

#endif
