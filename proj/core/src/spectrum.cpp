#include "hcp/spectrum.hpp"

#include <algorithm>

namespace hcp {

const char* existence_name(Existence e) {
    switch (e) {
        case Existence::Exists: return "exists";
        case Existence::Nonexistent: return "nonexistent";
        case Existence::Open: return "open";
    }
    return "?";
}

FilterVerdict nonexistence_filter(int c) {
    if (c < 1) throw ArgumentError("c must be positive");
    if (c <= 7 && c % 3 != 0) return FilterVerdict::Nonexistent;
    return FilterVerdict::Inconclusive;
}

std::optional<std::string> uniqueness_note(int c) {
    if (c == 3)
        return "a perfect coloring with parameters ((23,253)(3,273)) is unique up to "
               "automorphisms of the graph";
    return std::nullopt;
}

std::vector<SpectrumEntry> spectrum_table() {
    std::vector<SpectrumEntry> table;
    table.reserve(128);
    for (int c = 1; c <= 128; ++c) {
        SpectrumEntry e;
        e.c = c;
        for (int j = 0; j <= 8; ++j) {
            const int r = c - 8 * j;
            if (r < 0 || r % 3 != 0) continue;
            const int i = r / 3;
            if (i > 64 || i + j == 0 || i + j >= 72) continue;
            e.witnesses.emplace_back(i, j);
        }
        // Marks follow the conclusion table, complement colorings included:
        // swapping the two colors of a c'-coloring yields c = 256 - c'.
        for (int i = 1; i <= 64 && !e.circle; ++i) e.circle = (3 * i == c) || (256 - 3 * i == c);
        for (int j = 1; j <= 31 && !e.box; ++j) e.box = (8 * j == c) || (256 - 8 * j == c);
        if (!e.witnesses.empty()) {
            e.status = Existence::Exists;
        } else {
            e.status = nonexistence_filter(c) == FilterVerdict::Nonexistent
                           ? Existence::Nonexistent
                           : Existence::Open;
        }
        e.note = uniqueness_note(c);
        table.push_back(std::move(e));
    }
    return table;
}

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

std::vector<int> draw_distinct(SplitMix64& rng, int count, int hi) {
    std::vector<int> out;
    while (static_cast<int>(out.size()) < count) {
        const int v = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(hi));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ConstructionSpec> sample_mixed_specs(int count, uint64_t seed) {
    SplitMix64 rng{seed};
    std::vector<ConstructionSpec> specs;
    specs.reserve(static_cast<size_t>(count));
    for (int s = 0; s < count; ++s) {
        const int ni = 1 + static_cast<int>(rng.next() % 10);
        const int nj = 1 + static_cast<int>(rng.next() % 4);
        ConstructionSpec spec;
        spec.i_set = draw_distinct(rng, ni, ConstructionEngine::kGolayCosets);
        spec.j_set = draw_distinct(rng, nj, ConstructionEngine::kLinearCosets);
        spec.validate();
        specs.push_back(std::move(spec));
    }
    return specs;
}

}  // namespace hcp
