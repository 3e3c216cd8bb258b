#ifndef HCP_COLORING_HPP
#define HCP_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hcp/bitset.hpp"
#include "hcp/code.hpp"
#include "hcp/graph.hpp"

namespace hcp {

/// A total coloring of H(n) or of one halved-cube component, one byte per
/// vertex in index order. Color indices run over [0,k) and every color
/// must occur; for characteristic-function 2-colorings the set itself is
/// color 0 (the "first color"), so a parameter matrix lists the set's
/// row first.
struct Coloring {
    int n = 1;
    GraphKind graph = GraphKind::H1;
    int k = 1;
    std::vector<uint8_t> colors;

    uint64_t domain_size() const {
        return uint64_t{1} << (graph == GraphKind::H1 ? n : n - 1);
    }

    /// Checks sizes, color range and surjectivity; throws ArgumentError.
    void validate() const;

    /// Vertices of the given color as a bitset.
    VertexBitset color_set(int color) const;
};

/// 2-coloring with color 0 = support, color 1 = the rest. The support must
/// be a nonempty proper subset.
Coloring coloring_from_support(const VertexBitset& support, GraphKind graph, int n);

/// Colors every vertex of H(n) by its distance to the code; k-1 is the
/// covering radius. Computed by a multi-source BFS wavefront.
Coloring distance_coloring(const BinaryCode& c);

/// Restriction of an H1 coloring to one halved-cube component, with colors
/// renumbered densely. original_labels[dense] = original H1 color.
Coloring restrict_to_component(const Coloring& h1, GraphKind component,
                               std::vector<int>* original_labels = nullptr);

/// Binary format: magic "PCHC", version 1, n, graph tag, k, then raw color
/// bytes in index order.
void write_coloring(const Coloring& c, std::ostream& os);
Coloring read_coloring(std::istream& is);
void save_coloring(const Coloring& c, const std::string& path);
Coloring load_coloring(const std::string& path);

}  // namespace hcp

#endif
