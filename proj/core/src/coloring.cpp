#include "hcp/coloring.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace hcp {

void Coloring::validate() const {
    if (n < 1 || n > 30) throw ArgumentError("coloring length out of range");
    if (graph != GraphKind::H1 && n < 2)
        throw ArgumentError("halved-cube coloring needs n >= 2");
    if (k < 1 || k > 255) throw ArgumentError("color count out of range");
    if (colors.size() != domain_size())
        throw ArgumentError("coloring has " + std::to_string(colors.size()) +
                            " entries, expected " + std::to_string(domain_size()));
    std::vector<uint64_t> population(static_cast<size_t>(k), 0);
    for (uint8_t c : colors) {
        if (c >= k) throw ArgumentError("color value " + std::to_string(c) + " out of [0,k)");
        ++population[c];
    }
    for (int c = 0; c < k; ++c) {
        if (population[static_cast<size_t>(c)] == 0)
            throw ArgumentError("color " + std::to_string(c) + " never occurs");
    }
}

VertexBitset Coloring::color_set(int color) const {
    const int bits = (graph == GraphKind::H1) ? n : n - 1;
    VertexBitset out(bits);
    for (uint64_t i = 0; i < colors.size(); ++i) {
        if (colors[i] == color) out.set(i);
    }
    return out;
}

Coloring coloring_from_support(const VertexBitset& support, GraphKind graph, int n) {
    const int bits = (graph == GraphKind::H1) ? n : n - 1;
    if (support.index_bits() != bits)
        throw ArgumentError("support bitset does not match the graph's index space");
    const uint64_t sz = support.count();
    if (sz == 0 || sz == support.size())
        throw ArgumentError("2-coloring support must be a nonempty proper subset");
    Coloring col;
    col.n = n;
    col.graph = graph;
    col.k = 2;
    col.colors.assign(support.size(), 1);
    support.for_each_set([&](uint64_t i) { col.colors[i] = 0; });
    return col;
}

Coloring distance_coloring(const BinaryCode& c) {
    const int n = c.length();
    if (n > 30) throw ArgumentError("distance coloring limited to n <= 30");
    const SweepGraph g = SweepGraph::make(GraphKind::H1, n);

    Coloring col;
    col.n = n;
    col.graph = GraphKind::H1;
    col.colors.assign(g.vertex_count(), 0);

    VertexBitset frontier(n);
    c.for_each_word([&](uint32_t w) { frontier.set(w); });
    VertexBitset visited = frontier;
    VertexBitset next(n), shifted(n);

    int dist = 0;
    uint64_t seen = visited.count();
    while (seen < g.vertex_count()) {
        next.reset();
        for (uint32_t mask : g.masks) {
            frontier.xor_shift_into(mask, shifted);
            next |= shifted;
        }
        next.subtract(visited);
        if (next.none()) throw ConsistencyError("BFS stalled before covering H(n)");
        ++dist;
        if (dist > 255) throw ConsistencyError("covering radius exceeds color byte");
        next.for_each_set([&](uint64_t v) { col.colors[v] = static_cast<uint8_t>(dist); });
        visited |= next;
        seen += next.count();
        std::swap(frontier, next);
    }
    col.k = dist + 1;
    col.validate();
    return col;
}

Coloring restrict_to_component(const Coloring& h1, GraphKind component,
                               std::vector<int>* original_labels) {
    if (h1.graph != GraphKind::H1)
        throw ArgumentError("restrict_to_component expects an H1 coloring");
    if (component == GraphKind::H1)
        throw ArgumentError("component must be H2-even or H2-odd");
    const int n = h1.n;
    const int parity = (component == GraphKind::H2Even) ? 0 : 1;
    const uint64_t half = uint64_t{1} << (n - 1);

    std::vector<uint8_t> raw(half);
    std::vector<bool> present(static_cast<size_t>(h1.k), false);
    for (uint64_t i = 0; i < half; ++i) {
        const Word w = decode_compact(CompactIndex{static_cast<uint32_t>(i), parity}, n);
        const uint8_t c = h1.colors[w.bits()];
        raw[i] = c;
        present[c] = true;
    }
    std::vector<int> labels;
    std::vector<uint8_t> remap(static_cast<size_t>(h1.k), 0);
    for (int c = 0; c < h1.k; ++c) {
        if (present[static_cast<size_t>(c)]) {
            remap[static_cast<size_t>(c)] = static_cast<uint8_t>(labels.size());
            labels.push_back(c);
        }
    }
    Coloring out;
    out.n = n;
    out.graph = component;
    out.k = static_cast<int>(labels.size());
    out.colors.resize(half);
    for (uint64_t i = 0; i < half; ++i) out.colors[i] = remap[raw[i]];
    if (original_labels) *original_labels = std::move(labels);
    return out;
}

namespace {
constexpr char kMagic[4] = {'P', 'C', 'H', 'C'};
constexpr uint8_t kVersion = 1;
}  // namespace

void write_coloring(const Coloring& c, std::ostream& os) {
    c.validate();
    os.write(kMagic, 4);
    const uint8_t head[3] = {kVersion, static_cast<uint8_t>(c.n),
                             static_cast<uint8_t>(c.graph)};
    os.write(reinterpret_cast<const char*>(head), 3);
    const uint8_t k = static_cast<uint8_t>(c.k);
    os.write(reinterpret_cast<const char*>(&k), 1);
    os.write(reinterpret_cast<const char*>(c.colors.data()),
             static_cast<std::streamsize>(c.colors.size()));
    if (!os) throw IoError("failed to write coloring");
}

Coloring read_coloring(std::istream& is) {
    char magic[4] = {0};
    uint8_t head[4] = {0};
    is.read(magic, 4);
    is.read(reinterpret_cast<char*>(head), 4);
    if (!is || !std::equal(magic, magic + 4, kMagic)) throw IoError("not a PCHC coloring file");
    if (head[0] != kVersion) throw IoError("unsupported coloring version");
    Coloring c;
    c.n = head[1];
    if (head[2] > 2) throw IoError("invalid graph tag");
    c.graph = static_cast<GraphKind>(head[2]);
    c.k = head[3];
    if (c.n < 1 || c.n > 30 || c.k < 1) throw IoError("coloring header out of range");
    c.colors.resize(c.domain_size());
    is.read(reinterpret_cast<char*>(c.colors.data()),
            static_cast<std::streamsize>(c.colors.size()));
    if (!is || static_cast<uint64_t>(is.gcount()) != c.colors.size())
        throw IoError("coloring file truncated");
    try {
        c.validate();
    } catch (const ArgumentError& e) {
        throw IoError(std::string("coloring file invalid: ") + e.what());
    }
    return c;
}

void save_coloring(const Coloring& c, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_coloring(c, os);
}

Coloring load_coloring(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    return read_coloring(is);
}

}  // namespace hcp
