#ifndef HCP_CONSTRUCTION_HPP
#define HCP_CONSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hcp/coloring.hpp"
#include "hcp/verify.hpp"

namespace hcp {

/// The full tower of codes behind the construction, built and verified
/// once. f_cosets are F_1..F_64 (the partition of D by F, F_1 = F);
/// l_cosets are L_1..L_8 (the partition of N by L). Both orderings follow
/// the minimal-representative convention of coset_partition.
struct PaperCodes {
    BinaryCode c8, c8p, b8, f, d, c16, l, n;
    std::vector<BinaryCode> f_cosets;  // 64 cosets of F in D
    std::vector<BinaryCode> l_cosets;  // 8 cosets of L in N

    static PaperCodes build();
};

/// Selection of Golay-neighborhood cosets and L-cosets whose union is the
/// color-0 support of a 2-coloring of the odd component. Indices are
/// 1-based; the union must be nonempty and proper, so (64,8) is rejected
/// at build time.
struct ConstructionSpec {
    std::vector<int> i_set;  // subset of 1..64, t selects Omega(F_t)
    std::vector<int> j_set;  // subset of 1..8, m selects L_m

    void validate() const;  // ranges, duplicates, nonemptiness
    int c_value() const { return 3 * static_cast<int>(i_set.size()) + 8 * static_cast<int>(j_set.size()); }
    std::string to_string() const;
};

/// Holds the 72 candidate support sets Omega(F_1..64), L_1..8 as membership
/// bitsets over the odd component of HH(24). All sets are immutable once
/// built; unions verify pairwise disjointness instead of trusting the
/// distance arguments.
class ConstructionEngine {
  public:
    explicit ConstructionEngine(const PaperCodes& codes);

    static constexpr int kWordLength = 24;
    static constexpr int kGolayCosets = 64;
    static constexpr int kLinearCosets = 8;

    const VertexBitset& golay_neighborhood(int t) const;  // t in 1..64
    const VertexBitset& l_coset(int m) const;             // m in 1..8

    /// Union of the selected sets; throws DisjointnessError naming the
    /// first overlapping pair and a common word.
    VertexBitset union_support(const ConstructionSpec& spec) const;

    /// 2-coloring of H2-odd(24) whose color-0 support is the union.
    Coloring build_union(const ConstructionSpec& spec) const;

    /// Checks all 72 sets pairwise; throws DisjointnessError on overlap.
    void check_all_disjoint() const;

  private:
    const VertexBitset& set_by_flat_index(int idx) const;
    std::string set_name(int idx) const;

    std::vector<VertexBitset> omega_f_;  // 64 neighborhoods
    std::vector<VertexBitset> l_;        // 8 cosets
};

/// Named membership set, as fed to disjoint_union.
struct NamedSet {
    std::string name;
    const VertexBitset* set;
};

/// OR of the given sets after checking every pair for overlap; throws
/// DisjointnessError naming the first overlapping pair and a common word
/// (decoded in the component of the given parity).
VertexBitset disjoint_union(const std::vector<NamedSet>& sets, int n, int parity);

/// Decomposition of a component subset into full spheres plus a leftover.
/// A sphere is the 24-word distance-1 neighborhood of a vertex of the
/// opposite component; centers holds every such vertex whose entire sphere
/// lies inside the support.
struct SphereDecomposition {
    int n = 24;
    GraphKind support_component = GraphKind::H2Odd;
    VertexBitset centers{0};   // indices in the opposite component
    VertexBitset leftover{0};  // support minus the union of full spheres
    bool pairwise_disjoint = false;

    std::vector<Word> center_words() const;
};

SphereDecomposition decompose_spheres(const VertexBitset& support, GraphKind component, int n);

}  // namespace hcp

#endif
