#include "hcp/graph.hpp"

#include "hcp/error.hpp"

namespace hcp {

const char* graph_kind_name(GraphKind g) {
    switch (g) {
        case GraphKind::H1: return "H1";
        case GraphKind::H2Even: return "H2-even";
        case GraphKind::H2Odd: return "H2-odd";
    }
    return "?";
}

SweepGraph SweepGraph::make(GraphKind kind, int n) {
    if (n < 1 || n > 30) throw ArgumentError("graph length must be in [1,30]");
    SweepGraph g;
    g.kind = kind;
    g.n = n;
    if (kind == GraphKind::H1) {
        g.index_bits = n;
        for (int b = n - 1; b >= 0; --b) g.masks.push_back(uint32_t{1} << b);
    } else {
        if (n < 2) throw ArgumentError("halved cube needs n >= 2");
        g.index_bits = n - 1;
        // Weight-1 masks: pairs involving the dropped coordinate.
        for (int b = n - 2; b >= 0; --b) g.masks.push_back(uint32_t{1} << b);
        // Weight-2 masks over the kept coordinates.
        for (int b1 = n - 2; b1 >= 1; --b1) {
            for (int b0 = b1 - 1; b0 >= 0; --b0) {
                g.masks.push_back((uint32_t{1} << b1) | (uint32_t{1} << b0));
            }
        }
    }
    return g;
}

Word SweepGraph::word_at(uint64_t index) const {
    if (kind == GraphKind::H1) return Word(static_cast<uint32_t>(index), n);
    const int parity = (kind == GraphKind::H2Even) ? 0 : 1;
    return decode_compact(CompactIndex{static_cast<uint32_t>(index), parity}, n);
}

uint64_t SweepGraph::index_of(Word w) const {
    if (w.length() != n) throw ArgumentError("word length does not match graph");
    if (kind == GraphKind::H1) return w.bits();
    const int want = (kind == GraphKind::H2Even) ? 0 : 1;
    if (w.parity() != want)
        throw ArgumentError("word " + w.to_string() + " is not in component " +
                            graph_kind_name(kind));
    return encode_compact(w).value;
}

}  // namespace hcp
