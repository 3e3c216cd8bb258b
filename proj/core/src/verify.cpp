#include "hcp/verify.hpp"

#include <bit>
#include <functional>
#include <sstream>

#include "hcp/parallel.hpp"

namespace hcp {

std::string Witness::to_string() const {
    std::ostringstream os;
    os << "vertex " << vertex_index << " (" << vertex.to_string() << ") sees [";
    for (size_t j = 0; j < observed.size(); ++j) os << (j ? "," : "") << observed[j];
    os << "], vertex " << reference_index << " of the same color sees [";
    for (size_t j = 0; j < expected.size(); ++j) os << (j ? "," : "") << expected[j];
    os << "]";
    return os.str();
}

namespace {

// The sweep counts, for every vertex at once, its neighbors inside one
// color set. Counts are kept bit-sliced: plane p holds bit p of the count
// of each vertex, so adding a 0/1 addend for 64 vertices is a ripple-carry
// over at most bit_width(degree) machine words. One xor_shift per
// adjacency mask turns "neighbor membership" into an aligned addend.
struct BitPlanes {
    int planes;
    size_t words;
    std::vector<uint64_t> data;

    BitPlanes(int planes_, size_t words_)
        : planes(planes_), words(words_), data(static_cast<size_t>(planes_) * words_, 0) {}

    void reset() { std::fill(data.begin(), data.end(), uint64_t{0}); }
    uint64_t* plane(int p) { return data.data() + static_cast<size_t>(p) * words; }
    const uint64_t* plane(int p) const {
        return data.data() + static_cast<size_t>(p) * words;
    }
};

void accumulate_counts(const SweepGraph& g, const VertexBitset& src, BitPlanes& planes) {
    const auto src_words = src.words();
    const size_t nwords = src_words.size();
    parallel_for_ranges(0, nwords, [&](uint64_t a, uint64_t b) {
        for (uint32_t mask : g.masks) {
            const uint32_t hi = mask >> 6;
            const uint32_t lo = mask & 63;
            for (uint64_t w = a; w < b; ++w) {
                uint64_t carry = xor_shuffle_word(src_words[w ^ hi], lo);
                for (int p = 0; carry && p < planes.planes; ++p) {
                    uint64_t* row = planes.plane(p) + w;
                    const uint64_t x = *row;
                    *row = x ^ carry;
                    carry &= x;
                }
            }
        }
    });
}

// Marks every vertex whose bit-sliced count differs from the expected
// per-color constant.
void accumulate_mismatch(const BitPlanes& planes, const std::vector<VertexBitset>& sets,
                         const std::vector<std::vector<int64_t>>& refs, int column,
                         VertexBitset& mismatch) {
    const int k = static_cast<int>(sets.size());
    auto out = mismatch.mutable_words();
    parallel_for_ranges(0, planes.words, [&](uint64_t a, uint64_t b) {
        for (uint64_t w = a; w < b; ++w) {
            uint64_t bad = 0;
            for (int i = 0; i < k; ++i) {
                const uint64_t members = sets[static_cast<size_t>(i)].words()[w];
                if (!members) continue;
                const uint64_t expected = static_cast<uint64_t>(refs[static_cast<size_t>(i)][static_cast<size_t>(column)]);
                uint64_t diff = 0;
                for (int p = 0; p < planes.planes; ++p) {
                    const uint64_t want = ((expected >> p) & 1) ? ~uint64_t{0} : uint64_t{0};
                    diff |= planes.plane(p)[w] ^ want;
                }
                bad |= diff & members;
            }
            if (bad) out[w] |= bad;
        }
    });
}

VerificationReport verify_color_sets(const SweepGraph& g, const std::vector<VertexBitset>& sets,
                                     const std::function<int(uint64_t)>& color_of) {
    const int k = static_cast<int>(sets.size());
    const int degree = g.degree();

    auto direct_counts = [&](uint64_t v) {
        std::vector<int64_t> counts(static_cast<size_t>(k), 0);
        for (uint32_t mask : g.masks) ++counts[static_cast<size_t>(color_of(v ^ mask))];
        return counts;
    };

    std::vector<uint64_t> first_vertex(static_cast<size_t>(k), 0);
    std::vector<std::vector<int64_t>> refs(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const auto first = sets[static_cast<size_t>(i)].find_first();
        if (!first) throw ArgumentError("color " + std::to_string(i) + " never occurs");
        first_vertex[static_cast<size_t>(i)] = *first;
        refs[static_cast<size_t>(i)] = direct_counts(*first);
    }

    const size_t nwords = sets.front().words().size();
    const int nplanes = degree > 0 ? std::bit_width(static_cast<unsigned>(degree)) : 1;
    VertexBitset mismatch(g.index_bits);

    if (k > 1 && degree > 0) {
        BitPlanes planes(nplanes, nwords);
        // The last column is implied: counts always sum to the degree, so
        // matching columns 0..k-2 forces column k-1.
        for (int j = 0; j + 1 < k; ++j) {
            if (j > 0) planes.reset();
            accumulate_counts(g, sets[static_cast<size_t>(j)], planes);
            accumulate_mismatch(planes, sets, refs, j, mismatch);
        }
    }

    VerificationReport report;
    const auto bad = mismatch.find_first();
    if (!bad) {
        ParameterMatrix m(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = refs[static_cast<size_t>(i)][static_cast<size_t>(j)];
        report.perfect = true;
        report.matrix = std::move(m);
        return report;
    }
    Witness w;
    w.vertex_index = *bad;
    w.vertex = g.word_at(*bad);
    w.observed = direct_counts(*bad);
    const int color = color_of(*bad);
    w.expected = refs[static_cast<size_t>(color)];
    w.reference_index = first_vertex[static_cast<size_t>(color)];
    report.perfect = false;
    report.witness = std::move(w);
    return report;
}

}  // namespace

VerificationReport verify_perfect(const Coloring& col) {
    col.validate();
    const SweepGraph g = SweepGraph::make(col.graph, col.n);
    std::vector<VertexBitset> sets;
    sets.reserve(static_cast<size_t>(col.k));
    for (int c = 0; c < col.k; ++c) sets.push_back(col.color_set(c));
    return verify_color_sets(g, sets, [&](uint64_t v) { return static_cast<int>(col.colors[v]); });
}

VerificationReport verify_support(const SweepGraph& graph, const VertexBitset& support) {
    if (support.index_bits() != graph.index_bits)
        throw ArgumentError("support bitset does not match the graph's index space");
    const uint64_t sz = support.count();
    if (sz == 0 || sz == support.size())
        throw ArgumentError("2-coloring support must be a nonempty proper subset");
    std::vector<VertexBitset> sets;
    sets.push_back(support);
    sets.push_back(support);
    sets.back().complement();
    return verify_color_sets(graph, sets,
                             [&](uint64_t v) { return support.test(v) ? 0 : 1; });
}

ComponentVerification verify_perfect_h2_from_h1(const Coloring& col) {
    if (col.graph != GraphKind::H1)
        throw ArgumentError("verify_perfect_h2_from_h1 expects an H1 coloring");
    VerificationReport h1 = verify_perfect(col);
    if (!h1.perfect) throw NotPerfectError(*h1.witness);

    ComponentVerification out{*h1.matrix, {}, {}, {}, {}};
    Coloring even = restrict_to_component(col, GraphKind::H2Even, &out.even_labels);
    Coloring odd = restrict_to_component(col, GraphKind::H2Odd, &out.odd_labels);
    out.even = verify_perfect(even);
    out.odd = verify_perfect(odd);
    return out;
}

}  // namespace hcp
