#ifndef HCP_GF2_HPP
#define HCP_GF2_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace hcp::gf2 {

/// A GF(2) row basis in reduced row echelon form.
///
/// Pivots are chosen leftmost-textual-position first, i.e. by most
/// significant bit. Each stored row has a unique leading bit and that bit
/// is eliminated from every other row, which makes reduce() return the
/// minimum element of v + span (clear the highest clearable bit first).
class Basis {
  public:
    Basis() = default;

    /// Inserts v; returns true iff v was independent of the current span.
    bool insert(uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        const int p = 31 - std::countl_zero(v);
        for (int b = 0; b < 32; ++b) {
            if (rows_[b] && ((rows_[b] >> p) & 1u)) rows_[b] ^= v;
        }
        rows_[p] = v;
        ++rank_;
        return true;
    }

    /// Minimum element of the coset v + span.
    uint32_t reduce(uint32_t v) const {
        for (int b = 31; b >= 0; --b) {
            if (((v >> b) & 1u) && rows_[b]) v ^= rows_[b];
        }
        return v;
    }

    bool contains(uint32_t v) const { return reduce(v) == 0; }

    int rank() const { return rank_; }

    /// Rows ordered by leading bit, most significant first.
    std::vector<uint32_t> rows() const {
        std::vector<uint32_t> out;
        out.reserve(rank_);
        for (int b = 31; b >= 0; --b)
            if (rows_[b]) out.push_back(rows_[b]);
        return out;
    }

    bool operator==(const Basis&) const = default;

  private:
    std::array<uint32_t, 32> rows_{};  // rows_[b] has leading bit b, or 0
    int rank_ = 0;
};

/// Calls fn once per element of offset + span(rows), in Gray-code order
/// (each step XORs a single row).
template <typename Fn>
void for_each_in_span(const std::vector<uint32_t>& rows, uint32_t offset, Fn&& fn) {
    fn(offset);
    const uint64_t total = uint64_t{1} << rows.size();
    uint32_t w = offset;
    for (uint64_t i = 1; i < total; ++i) {
        w ^= rows[std::countr_zero(i)];
        fn(w);
    }
}

}  // namespace hcp::gf2

#endif
