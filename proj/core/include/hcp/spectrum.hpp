#ifndef HCP_SPECTRUM_HPP
#define HCP_SPECTRUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcp/construction.hpp"

namespace hcp {

enum class Existence { Exists, Nonexistent, Open };

const char* existence_name(Existence e);

/// One row of the conclusion table for parameters ((20+c,256-c)(c,276-c)).
///
/// witnesses lists the direct constructions this toolkit can build: (i,j)
/// with 3i+8j = c, 0 <= i <= 64, 0 <= j <= 8, i+j > 0. The marks also
/// account for complement colorings (swapping colors maps c' to 256-c'):
/// a circle needs some i in 1..64 with c = 3i or c = 256-3i; a box needs
/// some j in 1..31 with c = 8j or c = 256-8j (one component holds 32
/// cosets of L).
struct SpectrumEntry {
    int c = 0;
    Existence status = Existence::Open;
    std::vector<std::pair<int, int>> witnesses;
    bool circle = false;  // reachable from Golay-neighborhood cosets alone
    bool box = false;     // reachable from L-cosets alone
    std::optional<std::string> note;  // uniqueness remark, c = 3 only
};

/// Entries for c = 1..128.
std::vector<SpectrumEntry> spectrum_table();

enum class FilterVerdict { Nonexistent, Inconclusive };

/// The proved nonexistence consequence: a perfect coloring with c <= 7
/// must be a union of spheres, and a union of spheres needs c divisible by
/// 3 or c >= 25. Hence c <= 7 with c not divisible by 3 is impossible;
/// everything else is inconclusive by this filter.
FilterVerdict nonexistence_filter(int c);

/// The c = 3 coloring is unique up to graph automorphisms; no computation
/// behind it, just the annotation.
std::optional<std::string> uniqueness_note(int c);

inline constexpr uint64_t kDefaultSampleSeed = 24;

/// Deterministic sample of construction specs with both i- and j-parts
/// nonempty. Same seed, same specs, on every platform.
std::vector<ConstructionSpec> sample_mixed_specs(int count, uint64_t seed = kDefaultSampleSeed);

}  // namespace hcp

#endif
