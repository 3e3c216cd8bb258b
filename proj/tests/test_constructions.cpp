#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"

using namespace hcp;

namespace {

// Codes and engine are expensive enough to share across test cases.
const PaperCodes& codes() {
    static const PaperCodes c = PaperCodes::build();
    return c;
}

const ConstructionEngine& engine() {
    static const ConstructionEngine e(codes());
    return e;
}

}  // namespace

TEST_CASE("the 72 candidate sets partition the odd component") {
    CHECK_NOTHROW(engine().check_all_disjoint());
    uint64_t total = 0;
    VertexBitset all(23);
    for (int t = 1; t <= 64; ++t) {
        total += engine().golay_neighborhood(t).count();
        all |= engine().golay_neighborhood(t);
    }
    for (int m = 1; m <= 8; ++m) {
        total += engine().l_coset(m).count();
        all |= engine().l_coset(m);
    }
    CHECK(total == uint64_t{1} << 23);
    CHECK(all.count() == uint64_t{1} << 23);  // disjoint union covers everything
    CHECK(engine().golay_neighborhood(1).count() == 24 * 4096);
    CHECK(engine().l_coset(1).count() == uint64_t{1} << 18);
}

TEST_CASE("construction spec validation") {
    ConstructionSpec ok{{1, 2, 5}, {1}};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.c_value() == 17);
    CHECK(ok.to_string() == "i={1,2,5} j={1}");

    CHECK_THROWS_AS((ConstructionSpec{{}, {}}.validate()), ArgumentError);
    CHECK_THROWS_AS((ConstructionSpec{{0}, {}}.validate()), ArgumentError);
    CHECK_THROWS_AS((ConstructionSpec{{65}, {}}.validate()), ArgumentError);
    CHECK_THROWS_AS((ConstructionSpec{{3, 3}, {}}.validate()), ArgumentError);
    CHECK_THROWS_AS((ConstructionSpec{{}, {9}}.validate()), ArgumentError);

    // Selecting everything would color the whole component with one color.
    ConstructionSpec full;
    for (int t = 1; t <= 64; ++t) full.i_set.push_back(t);
    for (int m = 1; m <= 8; ++m) full.j_set.push_back(m);
    CHECK_THROWS_AS(engine().union_support(full), ArgumentError);
}

TEST_CASE("single-set unions reproduce the two base colorings") {
    const SweepGraph g = SweepGraph::make(GraphKind::H2Odd, 24);

    const Coloring omega = engine().build_union(ConstructionSpec{{1}, {}});
    const auto rep1 = verify_perfect(omega);
    REQUIRE(rep1.perfect);
    const ParameterMatrix want_omega{{23, 253}, {3, 273}};
    CHECK(*rep1.matrix == want_omega);
    CHECK(eigenvalue_of(*rep1.matrix) == 20);

    const auto rep2 = verify_support(g, engine().union_support(ConstructionSpec{{}, {1}}));
    REQUIRE(rep2.perfect);
    const ParameterMatrix want_l{{28, 248}, {8, 268}};
    CHECK(*rep2.matrix == want_l);
}

TEST_CASE("mixed union i={1,2} j={1} has parameters ((34,242)(14,262))") {
    const auto rep = verify_support(SweepGraph::make(GraphKind::H2Odd, 24),
                                    engine().union_support(ConstructionSpec{{1, 2}, {1}}));
    REQUIRE(rep.perfect);
    const ParameterMatrix want{{34, 242}, {14, 262}};
    CHECK(*rep.matrix == want);
}

TEST_CASE("disjoint_union names the overlapping pair and a common word") {
    VertexBitset a(23), b(23), c(23);
    a.set(10);
    a.set(20);
    b.set(30);
    c.set(20);
    c.set(40);

    const std::vector<NamedSet> fine = {{"A", &a}, {"B", &b}};
    CHECK(disjoint_union(fine, 24, 1).count() == 3);

    const std::vector<NamedSet> overlapping = {{"A", &a}, {"B", &b}, {"C", &c}};
    bool threw = false;
    try {
        disjoint_union(overlapping, 24, 1);
    } catch (const DisjointnessError& e) {
        threw = true;
        CHECK(e.first_set == "A");
        CHECK(e.second_set == "C");
        const Word w = Word::parse(e.common);
        CHECK(w.parity() == 1);
        CHECK(encode_compact(w).value == 20);
    }
    CHECK(threw);
}

TEST_CASE("sphere decomposition of a single sphere") {
    const Word center = Word::zero(24);  // even word
    VertexBitset support(23);
    for (const Word& u : neighbors_h1(center)) support.set(encode_compact(u).value);
    CHECK(support.count() == 24);

    const auto dec = decompose_spheres(support, GraphKind::H2Odd, 24);
    CHECK(dec.centers.count() == 1);
    CHECK(dec.center_words() == std::vector<Word>({center}));
    CHECK(dec.leftover.count() == 0);
    CHECK(dec.pairwise_disjoint);

    // Remove one word: the center disappears and 23 words are left over.
    VertexBitset damaged = support;
    damaged.clear(*support.find_first());
    const auto dec2 = decompose_spheres(damaged, GraphKind::H2Odd, 24);
    CHECK(dec2.centers.count() == 0);
    CHECK(dec2.leftover.count() == 23);
    CHECK(dec2.pairwise_disjoint);  // vacuously
}

TEST_CASE("overlapping spheres are detected") {
    const Word u = Word::zero(24);
    const Word v = u ^ Word::unit(1, 24) ^ Word::unit(2, 24);  // distance 2
    VertexBitset support(23);
    for (const Word& x : neighbors_h1(u)) support.set(encode_compact(x).value);
    for (const Word& x : neighbors_h1(v)) support.set(encode_compact(x).value);
    CHECK(support.count() == 46);  // the two spheres share two words

    const auto dec = decompose_spheres(support, GraphKind::H2Odd, 24);
    CHECK(dec.centers.count() == 2);
    CHECK(dec.leftover.count() == 0);
    CHECK_FALSE(dec.pairwise_disjoint);
}

TEST_CASE("sphere decomposition against a brute-force scan at n = 6") {
    testing::TestRng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        VertexBitset support(5);
        for (int i = 0; i < 20; ++i) support.set(rng.below(32));
        const auto dec = decompose_spheres(support, GraphKind::H2Even, 6);

        std::set<uint32_t> brute_centers;
        for (uint32_t ci = 0; ci < 32; ++ci) {
            const Word center = decode_compact(CompactIndex{ci, 1}, 6);
            bool whole = true;
            for (const Word& x : neighbors_h1(center)) {
                whole = whole && support.test(encode_compact(x).value);
            }
            if (whole) brute_centers.insert(ci);
        }
        std::set<uint32_t> got;
        dec.centers.for_each_set([&](uint64_t i) { got.insert(static_cast<uint32_t>(i)); });
        REQUIRE(got == brute_centers);

        std::set<uint32_t> covered;
        for (uint32_t ci : brute_centers) {
            const Word center = decode_compact(CompactIndex{ci, 1}, 6);
            for (const Word& x : neighbors_h1(center)) covered.insert(encode_compact(x).value);
        }
        CHECK(dec.leftover.count() == support.count() - covered.size());
        CHECK(dec.pairwise_disjoint == (covered.size() == 6 * brute_centers.size()));
    }
}

TEST_CASE("decompose_spheres of Omega(F) recovers the Golay code") {
    VertexBitset support(23);
    codes().f.for_each_word([&](uint32_t w) {
        for (int b = 0; b < 24; ++b) support.set((w ^ (uint32_t{1} << b)) >> 1);
    });
    const auto dec = decompose_spheres(support, GraphKind::H2Odd, 24);
    CHECK(dec.centers.count() == 4096);
    CHECK(dec.leftover.count() == 0);
    CHECK(dec.pairwise_disjoint);
    for (const Word& w : dec.center_words()) REQUIRE(codes().f.contains(w));
}

TEST_CASE("nonexistence filter") {
    CHECK(nonexistence_filter(1) == FilterVerdict::Nonexistent);
    CHECK(nonexistence_filter(2) == FilterVerdict::Nonexistent);
    CHECK(nonexistence_filter(4) == FilterVerdict::Nonexistent);
    CHECK(nonexistence_filter(5) == FilterVerdict::Nonexistent);
    CHECK(nonexistence_filter(7) == FilterVerdict::Nonexistent);
    CHECK(nonexistence_filter(3) == FilterVerdict::Inconclusive);
    CHECK(nonexistence_filter(6) == FilterVerdict::Inconclusive);
    CHECK(nonexistence_filter(8) == FilterVerdict::Inconclusive);
    CHECK(nonexistence_filter(10) == FilterVerdict::Inconclusive);
    CHECK(nonexistence_filter(25) == FilterVerdict::Inconclusive);
    CHECK_THROWS_AS(nonexistence_filter(0), ArgumentError);
}

TEST_CASE("uniqueness note attaches to c = 3 only") {
    CHECK(uniqueness_note(3).has_value());
    CHECK_FALSE(uniqueness_note(6).has_value());
    CHECK_FALSE(uniqueness_note(128).has_value());
}

TEST_CASE("spectrum table") {
    const auto table = spectrum_table();
    REQUIRE(table.size() == 128);
    int exists = 0, nonexistent = 0, open = 0;
    for (const auto& e : table) {
        switch (e.status) {
            case Existence::Exists: ++exists; break;
            case Existence::Nonexistent: ++nonexistent; break;
            case Existence::Open: ++open; break;
        }
        CHECK((e.status == Existence::Exists) == !e.witnesses.empty());
        for (auto [i, j] : e.witnesses) {
            CHECK(3 * i + 8 * j == e.c);
            CHECK(i >= 0);
            CHECK(i <= 64);
            CHECK(j >= 0);
            CHECK(j <= 8);
            CHECK(i + j > 0);
        }
    }
    CHECK(exists == 121);
    CHECK(nonexistent == 5);
    CHECK(open == 2);

    const auto& c8e = table[7];
    CHECK(c8e.c == 8);
    CHECK(c8e.box);
    CHECK_FALSE(c8e.circle);
    CHECK(std::find(c8e.witnesses.begin(), c8e.witnesses.end(), std::make_pair(0, 1)) !=
          c8e.witnesses.end());

    const auto& c10 = table[9];
    CHECK(c10.status == Existence::Open);
    CHECK(c10.witnesses.empty());
    const auto& c13 = table[12];
    CHECK(c13.status == Existence::Open);

    const auto& c24 = table[23];
    CHECK(c24.circle);
    CHECK(c24.box);
    CHECK(std::set<std::pair<int, int>>(c24.witnesses.begin(), c24.witnesses.end()) ==
          std::set<std::pair<int, int>>({{8, 0}, {0, 3}}));

    CHECK(table[2].note.has_value());  // c = 3 carries the uniqueness remark
    CHECK_FALSE(table[5].note.has_value());
}

TEST_CASE("sampled mixed specs are deterministic and valid") {
    const auto a = sample_mixed_specs(20);
    const auto b = sample_mixed_specs(20);
    REQUIRE(a.size() == 20);
    for (size_t s = 0; s < a.size(); ++s) {
        CHECK(a[s].i_set == b[s].i_set);
        CHECK(a[s].j_set == b[s].j_set);
        CHECK_FALSE(a[s].i_set.empty());
        CHECK_FALSE(a[s].j_set.empty());
        CHECK_NOTHROW(a[s].validate());
    }
    const auto other = sample_mixed_specs(20, 99);
    bool any_difference = false;
    for (size_t s = 0; s < a.size(); ++s) {
        any_difference = any_difference || a[s].i_set != other[s].i_set ||
                         a[s].j_set != other[s].j_set;
    }
    CHECK(any_difference);
}

TEST_CASE("xor_shift matches direct index arithmetic") {
    testing::TestRng rng(41);
    for (int bits : {3, 5, 6, 7, 10}) {
        VertexBitset s(bits);
        for (int i = 0; i < 40; ++i) s.set(rng.below(uint64_t{1} << bits));
        for (int trial = 0; trial < 20; ++trial) {
            const uint32_t mask = static_cast<uint32_t>(rng.below(uint64_t{1} << bits));
            const VertexBitset shifted = s.xor_shift(mask);
            for (uint64_t v = 0; v < s.size(); ++v) {
                REQUIRE(shifted.test(v) == s.test(v ^ mask));
            }
        }
    }
}
