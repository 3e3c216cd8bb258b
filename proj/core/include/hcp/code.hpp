#ifndef HCP_CODE_HPP
#define HCP_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcp/gf2.hpp"
#include "hcp/word.hpp"

namespace hcp {

/// A binary linear code, or a coset of one: offset + span(basis).
///
/// The basis is kept in reduced row echelon form (pivots by leftmost
/// textual position) and the offset is reduced to the minimum word of the
/// set, so equal sets compare equal and serialize identically. A code with
/// zero offset is linear and contains the zero word.
class BinaryCode {
  public:
    BinaryCode(int length, gf2::Basis basis, uint32_t offset = 0);

    int length() const { return length_; }
    int rank() const { return basis_.rank(); }
    uint64_t size() const { return uint64_t{1} << basis_.rank(); }
    bool linear() const { return offset_ == 0; }

    /// Minimum word of the set (equals zero iff linear).
    Word offset() const { return Word(offset_, length_); }
    const gf2::Basis& basis() const { return basis_; }
    std::vector<Word> basis_words() const;

    bool contains(Word w) const;
    /// True iff this set is contained in other (as sets of words).
    bool subset_of(const BinaryCode& other) const;

    template <typename Fn>
    void for_each_word(Fn&& fn) const {
        gf2::for_each_in_span(basis_.rows(), offset_, fn);
    }
    /// All words, sorted by numeric value. Intended for small codes.
    std::vector<Word> words() const;

    bool operator==(const BinaryCode& o) const = default;

  private:
    int length_;
    gf2::Basis basis_;
    uint32_t offset_;
};

/// Smallest linear code containing the seeds and closed under the cyclic
/// permutation of textual positions 1..7 (position 8 fixed). Seeds must
/// have length 8.
BinaryCode cyclic_closure_code(std::span<const Word> seeds);
BinaryCode cyclic_closure_code(Word seed);

/// The length-3n code {(x+y, x+z, x+y+z) : x in cx, y,z in cyz}.
/// Both inputs must be linear codes of the same length n, 3n <= 32.
BinaryCode turyn_compose(const BinaryCode& cx, const BinaryCode& cyz);

/// Minimum nonzero weight of the code's span, which equals the minimum
/// pairwise distance of the (possibly translated) set. Throws for
/// singleton codes.
int min_distance(const BinaryCode& c);

/// Minimum pairwise Hamming distance of an explicit word set.
int min_distance(std::span<const Word> words);

/// All words at distance exactly 1 from the set, deduplicated and sorted.
std::vector<Word> neighborhood(const BinaryCode& c);
std::vector<Word> neighborhood(std::span<const Word> words);

/// Partitions super into |super|/|sub| cosets of sub. sub must be linear
/// with span(sub) contained in span(super); super may itself be a coset.
/// Cosets are ordered by their minimal representative; if super is linear
/// the first coset is sub itself.
std::vector<BinaryCode> coset_partition(const BinaryCode& sub, const BinaryCode& super);

/// min { distance(u, v) : u in a, v in b } = minimum weight of the coset
/// (a.offset + b.offset) + span(a.basis, b.basis).
int set_distance(const BinaryCode& a, const BinaryCode& b);

// The named codes of the construction. Each builder verifies the
// parameters it is responsible for and throws ConsistencyError on
// mismatch.
BinaryCode build_c8();        // (8,16,4), seed 00101110
BinaryCode build_c8_prime();  // (8,16,4), seed 01001110
BinaryCode build_b8();        // (8,128,2), all even-weight words
BinaryCode build_f();         // (24,2^12,8), the extended Golay code
BinaryCode build_d();         // (24,2^18,4)
BinaryCode build_c16();       // (16,2^11,4)
BinaryCode build_l();         // 2^18 even-weight words, B8 x C16
BinaryCode build_n();         // 2^21 odd-weight words, B8^3 translated

/// Text serialization: header `code n=<n> k=<rank> offset=<word|->`,
/// then one basis word per line, pivots leftmost first.
void write_code(const BinaryCode& c, std::ostream& os);
BinaryCode read_code(std::istream& is);

std::string code_name_list();  // "c8,c8p,b8,f,d,c16,l,n"
BinaryCode build_named_code(const std::string& name);

}  // namespace hcp

#endif
