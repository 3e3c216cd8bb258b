#include <doctest.h>

#include <sstream>

#include "oracle.hpp"

using namespace hcp;

namespace {

// chi of {words with even parity on the first t positions} is perfect on
// H(n) with ((n-t,t)(t,n-t)).
Coloring prefix_parity_coloring(int n, int t) {
    Coloring col;
    col.n = n;
    col.graph = GraphKind::H1;
    col.k = 2;
    col.colors.resize(uint64_t{1} << n);
    const uint32_t prefix_mask = ((uint32_t{1} << t) - 1) << (n - t);
    for (uint64_t v = 0; v < col.colors.size(); ++v) {
        col.colors[v] = static_cast<uint8_t>(std::popcount(static_cast<uint32_t>(v) & prefix_mask) & 1);
    }
    return col;
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
    if (a.perfect != b.perfect) return false;
    if (a.perfect) return *a.matrix == *b.matrix;
    return a.witness->vertex_index == b.witness->vertex_index &&
           a.witness->observed == b.witness->observed &&
           a.witness->expected == b.witness->expected &&
           a.witness->reference_index == b.witness->reference_index;
}

}  // namespace

TEST_CASE("verify_perfect agrees with the brute-force oracle on random colorings") {
    testing::TestRng rng(2024);
    int perfect_seen = 0, violated_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(5));  // 4..8
        const GraphKind graph = static_cast<GraphKind>(rng.below(3));
        const int k = 1 + static_cast<int>(rng.below(4));
        const Coloring col = testing::random_coloring(rng, n, graph, k);
        const VerificationReport lib = verify_perfect(col);
        const VerificationReport oracle = testing::oracle_verify(col);
        REQUIRE(reports_equal(lib, oracle));
        if (lib.perfect) {
            REQUIRE(lib.matrix->rows_sum_to(SweepGraph::make(graph, n).degree()));
        }
        (lib.perfect ? perfect_seen : violated_seen)++;
    }
    CHECK(violated_seen > 200);  // random colorings are almost never perfect
    CHECK(perfect_seen >= 0);
}

TEST_CASE("verify_perfect on known perfect colorings") {
    for (int n : {4, 6, 8}) {
        for (int t = 0; t <= n; ++t) {
            const Coloring col = (t == 0) ? Coloring{n, GraphKind::H1, 1,
                                                     std::vector<uint8_t>(uint64_t{1} << n, 0)}
                                          : prefix_parity_coloring(n, t);
            const auto rep = verify_perfect(col);
            REQUIRE(rep.perfect);
            const ParameterMatrix want =
                (t == 0) ? ParameterMatrix{{n}} : ParameterMatrix{{n - t, t}, {t, n - t}};
            CHECK(*rep.matrix == want);
        }
    }
    // All-one-color on a halved component is trivially perfect with degree
    // n(n-1)/2 in the single cell.
    const int n = 8;
    Coloring half{n, GraphKind::H2Even, 1, std::vector<uint8_t>(uint64_t{1} << (n - 1), 0)};
    const auto rep = verify_perfect(half);
    REQUIRE(rep.perfect);
    CHECK(*rep.matrix == ParameterMatrix{{n * (n - 1) / 2}});
}

TEST_CASE("verify_support matches verify_perfect on 2-colorings") {
    testing::TestRng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(4));
        const GraphKind graph = static_cast<GraphKind>(rng.below(3));
        const Coloring col = testing::random_coloring(rng, n, graph, 2);
        const auto a = verify_perfect(col);
        const auto b = verify_support(SweepGraph::make(graph, n), col.color_set(0));
        REQUIRE(reports_equal(a, b));
    }
}

TEST_CASE("witness picks the first failing vertex against the first of its color") {
    // Perfect parity coloring on H(4), then recolor one vertex.
    Coloring col = prefix_parity_coloring(4, 4);
    col.colors[9] ^= 1;
    const auto lib = verify_perfect(col);
    const auto oracle = testing::oracle_verify(col);
    REQUIRE_FALSE(lib.perfect);
    REQUIRE(reports_equal(lib, oracle));
    CHECK(lib.witness->vertex_index < 9);  // some neighbor of 9 breaks first
}

TEST_CASE("distance coloring of the zero code is the weight coloring") {
    const int n = 8;
    const BinaryCode zero(n, gf2::Basis{});
    const Coloring col = distance_coloring(zero);
    CHECK(col.k == n + 1);
    for (uint64_t v = 0; v < col.colors.size(); ++v) {
        CHECK(col.colors[v] == std::popcount(static_cast<uint32_t>(v)));
    }
}

TEST_CASE("distance coloring of the even-weight code is the parity coloring") {
    gf2::Basis basis;
    for (int b = 1; b < 6; ++b) basis.insert((uint32_t{1} << b) | 1u);
    const BinaryCode even(6, basis);
    const Coloring col = distance_coloring(even);
    CHECK(col.k == 2);
    const auto rep = verify_perfect(col);
    REQUIRE(rep.perfect);
    const ParameterMatrix want{{0, 6}, {6, 0}};
    CHECK(*rep.matrix == want);
}

TEST_CASE("transform_h1_to_h2 reproduces the eigenvalue-20 table entries") {
    const ParameterMatrix want_a{{148, 128}, {128, 148}};
    CHECK(transform_h1_to_h2(ParameterMatrix{{8, 16}, {16, 8}}, 24) == want_a);
    const ParameterMatrix want_b{{84, 192}, {64, 212}};
    CHECK(transform_h1_to_h2(ParameterMatrix{{0, 24}, {8, 16}}, 24) == want_b);

    const ParameterMatrix golay_h1{{0, 24, 0, 0, 0},
                                   {1, 0, 23, 0, 0},
                                   {0, 2, 0, 22, 0},
                                   {0, 0, 3, 0, 21},
                                   {0, 0, 0, 24, 0}};
    const ParameterMatrix golay_h2{{0, 0, 276, 0, 0},
                                   {0, 23, 0, 253, 0},
                                   {1, 0, 44, 0, 231},
                                   {0, 3, 0, 273, 0},
                                   {0, 0, 36, 0, 240}};
    CHECK(transform_h1_to_h2(golay_h1, 24) == golay_h2);
}

TEST_CASE("transform_h1_to_h2 rejects non-integral results") {
    CHECK_THROWS_AS(transform_h1_to_h2(ParameterMatrix{{0, 2}, {1, 1}}, 2), IntegralityError);
    CHECK_THROWS_AS(transform_h1_to_h2(ParameterMatrix{{0, 1}, {1, 0}}, 2), IntegralityError);
}

TEST_CASE("transform commutes with component verification at small n") {
    // For every H1-perfect 2-coloring in this family, the component
    // matrices are submatrices of the transform.
    for (int n : {4, 6, 8}) {
        for (int t = 1; t <= n; ++t) {
            const Coloring col = prefix_parity_coloring(n, t);
            const ComponentVerification comp = verify_perfect_h2_from_h1(col);
            const ParameterMatrix hh = transform_h1_to_h2(comp.h1_matrix, n);
            for (const auto* side : {&comp.even, &comp.odd}) {
                REQUIRE(side->perfect);
            }
            const auto check_side = [&](const VerificationReport& rep,
                                        const std::vector<int>& labels) {
                const int kk = rep.matrix->k();
                for (int i = 0; i < kk; ++i) {
                    for (int j = 0; j < kk; ++j) {
                        REQUIRE(rep.matrix->at(i, j) ==
                                hh.at(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]));
                    }
                }
            };
            check_side(comp.even, comp.even_labels);
            check_side(comp.odd, comp.odd_labels);
        }
    }
}

TEST_CASE("verify_perfect_h2_from_h1 drops absent colors and reports labels") {
    // Parity coloring: the even component sees only color 0, the odd one
    // only color 1.
    const Coloring col = prefix_parity_coloring(6, 6);
    const ComponentVerification comp = verify_perfect_h2_from_h1(col);
    CHECK(comp.even_labels == std::vector<int>({0}));
    CHECK(comp.odd_labels == std::vector<int>({1}));
    CHECK(*comp.even.matrix == ParameterMatrix{{15}});
    CHECK(*comp.odd.matrix == ParameterMatrix{{15}});

    Coloring broken = prefix_parity_coloring(4, 4);
    broken.colors[3] ^= 1;
    CHECK_THROWS_AS(verify_perfect_h2_from_h1(broken), NotPerfectError);
    try {
        verify_perfect_h2_from_h1(broken);
    } catch (const NotPerfectError& e) {
        CHECK(e.witness.observed.size() == 2);  // carries the H1 witness
    }
}

TEST_CASE("eigenvalue_of") {
    CHECK(eigenvalue_of(ParameterMatrix{{23, 253}, {3, 273}}) == 20);
    CHECK(eigenvalue_of(ParameterMatrix{{28, 248}, {8, 268}}) == 20);
    CHECK(eigenvalue_of(ParameterMatrix{{0, 6}, {6, 0}}) == -6);
    CHECK_THROWS_AS(eigenvalue_of(ParameterMatrix{{1, 2}, {3, 5}}), ArgumentError);
    CHECK_THROWS_AS(eigenvalue_of(ParameterMatrix{{276}}), ArgumentError);
}

TEST_CASE("parameter matrix parse/print") {
    const ParameterMatrix m = ParameterMatrix::parse("23,253;3,273");
    const ParameterMatrix want{{23, 253}, {3, 273}};
    CHECK(m == want);
    CHECK(m.to_compact_string() == "23,253;3,273");
    CHECK(m.to_string() == "((23,253)(3,273))");
    CHECK(m.rows_sum_to(276));
    CHECK_FALSE(m.rows_sum_to(24));
    CHECK_THROWS_AS(ParameterMatrix::parse("1,2;3"), ArgumentError);
    CHECK_THROWS_AS(ParameterMatrix::parse("1,a;3,4"), ArgumentError);
}

TEST_CASE("coloring file round trip and error paths") {
    testing::TestRng rng(9);
    const Coloring col = testing::random_coloring(rng, 6, GraphKind::H2Odd, 3);
    std::stringstream ss;
    write_coloring(col, ss);
    const Coloring back = read_coloring(ss);
    CHECK(back.n == col.n);
    CHECK(back.graph == col.graph);
    CHECK(back.k == col.k);
    CHECK(back.colors == col.colors);

    std::stringstream bad_magic("XXXX rest");
    CHECK_THROWS_AS(read_coloring(bad_magic), IoError);

    std::stringstream truncated;
    write_coloring(col, truncated);
    std::string data = truncated.str();
    data.resize(data.size() - 5);
    std::stringstream short_stream(data);
    CHECK_THROWS_AS(read_coloring(short_stream), IoError);

    // A color byte >= k makes the payload invalid.
    std::stringstream corrupt;
    write_coloring(col, corrupt);
    data = corrupt.str();
    data[12] = char(250);
    std::stringstream corrupt_stream(data);
    CHECK_THROWS_AS(read_coloring(corrupt_stream), IoError);
}

TEST_CASE("verification reports are independent of the worker count") {
    testing::TestRng rng(81);
    VertexBitset support(13);
    for (int i = 0; i < 2000; ++i) support.set(rng.below(uint64_t{1} << 13));
    const SweepGraph g = SweepGraph::make(GraphKind::H2Odd, 14);

    set_thread_count(1);
    const auto serial = verify_support(g, support);
    set_thread_count(3);
    const auto three = verify_support(g, support);
    set_thread_count(8);
    const auto eight = verify_support(g, support);
    set_thread_count(0);  // back to the default resolution

    REQUIRE(serial.perfect == three.perfect);
    REQUIRE(serial.perfect == eight.perfect);
    if (!serial.perfect) {
        CHECK(serial.witness->vertex_index == three.witness->vertex_index);
        CHECK(serial.witness->vertex_index == eight.witness->vertex_index);
        CHECK(serial.witness->observed == eight.witness->observed);
    }
}

TEST_CASE("coloring validation") {
    Coloring col{4, GraphKind::H1, 2, std::vector<uint8_t>(16, 0)};
    CHECK_THROWS_AS(col.validate(), ArgumentError);  // color 1 never occurs
    col.colors[3] = 1;
    CHECK_NOTHROW(col.validate());
    col.colors.pop_back();
    CHECK_THROWS_AS(col.validate(), ArgumentError);  // wrong domain size
}
