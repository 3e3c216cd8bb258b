#include "hcp/construction.hpp"

#include <algorithm>
#include <sstream>

namespace hcp {

PaperCodes PaperCodes::build() {
    PaperCodes p{build_c8(),  build_c8_prime(), build_b8(), build_f(),
                 build_d(),   build_c16(),      build_l(),  build_n(),
                 {},          {}};
    p.f_cosets = coset_partition(p.f, p.d);
    p.l_cosets = coset_partition(p.l, p.n);
    if (p.f_cosets.size() != 64) throw ConsistencyError("expected 64 cosets of F in D");
    if (p.l_cosets.size() != 8) throw ConsistencyError("expected 8 cosets of L in N");
    return p;
}

void ConstructionSpec::validate() const {
    auto check = [](const std::vector<int>& xs, int hi, const char* what) {
        std::vector<int> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 1 || sorted[i] > hi)
                throw ArgumentError(std::string(what) + " index " + std::to_string(sorted[i]) +
                                    " out of [1," + std::to_string(hi) + "]");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw ArgumentError(std::string(what) + " index " + std::to_string(sorted[i]) +
                                    " repeated");
        }
    };
    check(i_set, ConstructionEngine::kGolayCosets, "i");
    check(j_set, ConstructionEngine::kLinearCosets, "j");
    if (i_set.empty() && j_set.empty()) throw ArgumentError("construction spec selects no sets");
}

std::string ConstructionSpec::to_string() const {
    auto join = [](const std::vector<int>& xs) {
        std::vector<int> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        std::ostringstream os;
        for (size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i];
        return os.str();
    };
    return "i={" + join(i_set) + "} j={" + join(j_set) + "}";
}

namespace {

constexpr int kIndexBits = ConstructionEngine::kWordLength - 1;

// Compact index of an odd-weight 24-bit word.
inline uint32_t odd_index(uint32_t bits) { return bits >> 1; }

Word odd_word_at(uint64_t index) {
    return decode_compact(CompactIndex{static_cast<uint32_t>(index), 1},
                          ConstructionEngine::kWordLength);
}

}  // namespace

ConstructionEngine::ConstructionEngine(const PaperCodes& codes) {
    omega_f_.reserve(kGolayCosets);
    for (const BinaryCode& coset : codes.f_cosets) {
        VertexBitset set(kIndexBits);
        coset.for_each_word([&](uint32_t w) {
            for (int b = 0; b < kWordLength; ++b) set.set(odd_index(w ^ (uint32_t{1} << b)));
        });
        if (set.count() != uint64_t{24} * coset.size())
            throw ConsistencyError("Golay coset neighborhood has unexpected size");
        omega_f_.push_back(std::move(set));
    }
    l_.reserve(kLinearCosets);
    for (const BinaryCode& coset : codes.l_cosets) {
        VertexBitset set(kIndexBits);
        coset.for_each_word([&](uint32_t w) { set.set(odd_index(w)); });
        if (set.count() != coset.size())
            throw ConsistencyError("L coset landed on fewer indices than words");
        l_.push_back(std::move(set));
    }
}

const VertexBitset& ConstructionEngine::golay_neighborhood(int t) const {
    if (t < 1 || t > kGolayCosets) throw ArgumentError("Golay coset index out of [1,64]");
    return omega_f_[static_cast<size_t>(t - 1)];
}

const VertexBitset& ConstructionEngine::l_coset(int m) const {
    if (m < 1 || m > kLinearCosets) throw ArgumentError("L coset index out of [1,8]");
    return l_[static_cast<size_t>(m - 1)];
}

const VertexBitset& ConstructionEngine::set_by_flat_index(int idx) const {
    return idx < kGolayCosets ? omega_f_[static_cast<size_t>(idx)]
                              : l_[static_cast<size_t>(idx - kGolayCosets)];
}

std::string ConstructionEngine::set_name(int idx) const {
    if (idx < kGolayCosets) return "Omega(F_" + std::to_string(idx + 1) + ")";
    return "L_" + std::to_string(idx - kGolayCosets + 1);
}

VertexBitset disjoint_union(const std::vector<NamedSet>& sets, int n, int parity) {
    if (sets.empty()) throw ArgumentError("disjoint_union of no sets");
    for (size_t a = 0; a < sets.size(); ++a) {
        for (size_t b = a + 1; b < sets.size(); ++b) {
            const auto common = sets[a].set->first_common(*sets[b].set);
            if (common) {
                const Word w =
                    decode_compact(CompactIndex{static_cast<uint32_t>(*common), parity}, n);
                throw DisjointnessError(sets[a].name, sets[b].name, w.to_string());
            }
        }
    }
    VertexBitset out = *sets.front().set;
    for (size_t a = 1; a < sets.size(); ++a) out |= *sets[a].set;
    return out;
}

VertexBitset ConstructionEngine::union_support(const ConstructionSpec& spec) const {
    spec.validate();
    std::vector<int> flat;
    for (int t : spec.i_set) flat.push_back(t - 1);
    for (int m : spec.j_set) flat.push_back(kGolayCosets + m - 1);
    std::sort(flat.begin(), flat.end());

    // Disjointness is verified on the membership bitsets, not assumed from
    // the distance arguments.
    std::vector<NamedSet> named;
    named.reserve(flat.size());
    for (int idx : flat) named.push_back(NamedSet{set_name(idx), &set_by_flat_index(idx)});
    VertexBitset out = disjoint_union(named, kWordLength, 1);
    if (out.count() == out.size())
        throw ArgumentError("selected sets cover the whole component; the union must be proper");
    return out;
}

Coloring ConstructionEngine::build_union(const ConstructionSpec& spec) const {
    return coloring_from_support(union_support(spec), GraphKind::H2Odd, kWordLength);
}

void ConstructionEngine::check_all_disjoint() const {
    const int total = kGolayCosets + kLinearCosets;
    for (int a = 0; a < total; ++a) {
        for (int b = a + 1; b < total; ++b) {
            const auto common = set_by_flat_index(a).first_common(set_by_flat_index(b));
            if (common) {
                throw DisjointnessError(set_name(a), set_name(b),
                                        odd_word_at(*common).to_string());
            }
        }
    }
}

std::vector<Word> SphereDecomposition::center_words() const {
    const int parity = (support_component == GraphKind::H2Even) ? 1 : 0;
    std::vector<Word> out;
    out.reserve(centers.count());
    centers.for_each_set([&](uint64_t i) {
        out.push_back(decode_compact(CompactIndex{static_cast<uint32_t>(i), parity}, n));
    });
    return out;
}

SphereDecomposition decompose_spheres(const VertexBitset& support, GraphKind component, int n) {
    if (component == GraphKind::H1)
        throw ArgumentError("sphere decomposition lives on a halved-cube component");
    if (support.index_bits() != n - 1)
        throw ArgumentError("support bitset does not match the component's index space");

    // A center c of the opposite component shares the compact index space;
    // its sphere is {c} plus the n-1 single-bit translates of c. The
    // candidate scan is n-1 xor-shifts and an AND across them.
    SphereDecomposition out;
    out.n = n;
    out.support_component = component;
    out.centers = support;
    VertexBitset shifted(n - 1);
    for (int b = 0; b < n - 1; ++b) {
        support.xor_shift_into(uint32_t{1} << b, shifted);
        out.centers &= shifted;
    }

    VertexBitset covered = out.centers;
    for (int b = 0; b < n - 1; ++b) {
        out.centers.xor_shift_into(uint32_t{1} << b, shifted);
        covered |= shifted;
    }
    out.leftover = support;
    out.leftover.subtract(covered);
    out.pairwise_disjoint =
        covered.count() == static_cast<uint64_t>(n) * out.centers.count();
    return out;
}

}  // namespace hcp
