#ifndef HCP_VERIFY_HPP
#define HCP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcp/coloring.hpp"
#include "hcp/matrix.hpp"

namespace hcp {

/// First vertex (in index order) whose neighbor color counts disagree with
/// the counts of the lowest-indexed vertex of the same color.
struct Witness {
    uint64_t vertex_index = 0;
    Word vertex;
    std::vector<int64_t> observed;   // color counts at vertex_index
    std::vector<int64_t> expected;   // counts at reference_index
    uint64_t reference_index = 0;

    std::string to_string() const;
};

struct VerificationReport {
    bool perfect = false;
    std::optional<ParameterMatrix> matrix;  // set iff perfect
    std::optional<Witness> witness;         // set iff violated
};

/// Sweeps every vertex of the coloring's graph and counts neighbor colors.
/// Returns the parameter matrix if the counts depend only on the vertex's
/// own color, otherwise the first violation.
VerificationReport verify_perfect(const Coloring& col);

/// Same check for the 2-coloring with the given color-0 support (kept as a
/// packed bitset throughout).
VerificationReport verify_support(const SweepGraph& graph, const VertexBitset& support);

/// verify_perfect on an H1 coloring that is not perfect.
struct NotPerfectError : Error {
    explicit NotPerfectError(Witness w)
        : Error("coloring is not perfect on H1: " + w.to_string()), witness(std::move(w)) {}
    Witness witness;
};

/// Component reports of an H1-perfect coloring.
struct ComponentVerification {
    ParameterMatrix h1_matrix;
    VerificationReport even, odd;
    std::vector<int> even_labels, odd_labels;  // dense color -> original H1 color
};

/// Verifies col on H1, then restricts it to both halved-cube components
/// (dropping absent colors) and verifies each restriction. Throws
/// NotPerfectError if col is not perfect on H1.
ComponentVerification verify_perfect_h2_from_h1(const Coloring& col);

}  // namespace hcp

#endif
