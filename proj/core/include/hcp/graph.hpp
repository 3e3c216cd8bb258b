#ifndef HCP_GRAPH_HPP
#define HCP_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "hcp/word.hpp"

namespace hcp {

/// The graphs a coloring can live on. H1 is the hypercube H(n); H2Even and
/// H2Odd are the two components of the distance-2 graph HH(n), indexed by
/// CompactIndex values.
enum class GraphKind : uint8_t { H1 = 0, H2Even = 1, H2Odd = 2 };

const char* graph_kind_name(GraphKind g);

/// XOR-structured adjacency: vertex i is adjacent to i ^ m for every mask m.
///
/// H(n) uses the raw word value as index with the n single-bit masks.
/// A halved-cube component uses the compact index with all masks of weight
/// 1 or 2 over n-1 bits (a flip involving the dropped coordinate shows up
/// as a weight-1 mask). Both components share the same mask set.
struct SweepGraph {
    GraphKind kind;
    int n;                        // word length
    int index_bits;               // vertex index space = [0, 2^index_bits)
    std::vector<uint32_t> masks;  // adjacency masks, no duplicates, none zero

    static SweepGraph make(GraphKind kind, int n);

    int degree() const { return static_cast<int>(masks.size()); }
    uint64_t vertex_count() const { return uint64_t{1} << index_bits; }

    /// The word a vertex index stands for.
    Word word_at(uint64_t index) const;
    /// Inverse of word_at; the word must belong to this graph.
    uint64_t index_of(Word w) const;
};

}  // namespace hcp

#endif
