#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"

using namespace hcp;

TEST_CASE("word parse/format round trip and position semantics") {
    const Word w = Word::parse("00101110");
    CHECK(w.length() == 8);
    CHECK(w.weight() == 4);
    CHECK(w.to_string() == "00101110");
    CHECK(w.at_position(3));
    CHECK(w.at_position(5));
    CHECK(w.at_position(6));
    CHECK(w.at_position(7));
    CHECK_FALSE(w.at_position(1));
    CHECK_FALSE(w.at_position(8));
    CHECK(Word::parse("1").bits() == 1);
    CHECK(Word::parse("10").bits() == 2);
    CHECK_THROWS_AS(Word::parse("01x1"), ArgumentError);
    CHECK_THROWS_AS(Word::parse(""), ArgumentError);

    testing::TestRng rng(7);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.below(32));
        const uint32_t bits = static_cast<uint32_t>(rng.next()) &
                              (n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1));
        const Word v(bits, n);
        CHECK(Word::parse(v.to_string()) == v);
    }
}

TEST_CASE("distance") {
    const Word zero = Word::zero(24);
    Word two = zero ^ Word::unit(1, 24) ^ Word::unit(2, 24);
    CHECK(distance(zero, two) == 2);
    CHECK(distance(two, two) == 0);
    // The two seed words of the C8 construction differ in positions {2,3}.
    CHECK(distance(Word::parse("00101110"), Word::parse("01001110")) == 2);
    CHECK_THROWS_AS(distance(Word::zero(8), Word::zero(9)), ArgumentError);
}

TEST_CASE("distance satisfies the triangle inequality") {
    uint64_t violations = 0;
    const int n = 6;
    for (uint32_t u = 0; u < (1u << n); ++u) {
        for (uint32_t v = 0; v < (1u << n); ++v) {
            for (uint32_t w = 0; w < (1u << n); ++w) {
                const Word a(u, n), b(v, n), c(w, n);
                if (distance(a, c) > distance(a, b) + distance(b, c)) ++violations;
            }
        }
    }
    testing::TestRng rng(11);
    for (int i = 0; i < 100000; ++i) {
        const Word a(static_cast<uint32_t>(rng.below(4096)), 12);
        const Word b(static_cast<uint32_t>(rng.below(4096)), 12);
        const Word c(static_cast<uint32_t>(rng.below(4096)), 12);
        if (distance(a, c) > distance(a, b) + distance(b, c)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("neighbors_h1") {
    const auto n3 = neighbors_h1(Word::zero(3));
    const std::set<Word> got(n3.begin(), n3.end());
    const std::set<Word> want = {Word::parse("100"), Word::parse("010"), Word::parse("001")};
    CHECK(got == want);

    const auto n2 = neighbors_h1(Word::parse("11"));
    CHECK(std::set<Word>(n2.begin(), n2.end()) ==
          std::set<Word>({Word::parse("01"), Word::parse("10")}));

    const auto n24 = neighbors_h1(Word::parse("000000000000000000000001"));
    CHECK(n24.size() == 24);
    CHECK(std::set<Word>(n24.begin(), n24.end()).size() == 24);
    for (const Word& u : n24) CHECK(distance(u, Word::parse("000000000000000000000001")) == 1);
}

TEST_CASE("neighbors_h2") {
    const auto n3 = neighbors_h2(Word::zero(3));
    CHECK(std::set<Word>(n3.begin(), n3.end()) ==
          std::set<Word>({Word::parse("110"), Word::parse("101"), Word::parse("011")}));
    CHECK(neighbors_h2(Word::zero(4)).size() == 6);

    const Word v(0xABCDEFu, 24);
    const auto n24 = neighbors_h2(v);
    CHECK(n24.size() == 276);
    for (const Word& u : n24) CHECK(u.parity() == v.parity());

    // Brute force: exactly the words at distance 2, for every v at n <= 10.
    for (int n : {4, 7, 10}) {
        uint64_t mismatches = 0;
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            const Word w(bits, n);
            const auto fast = neighbors_h2(w);
            std::set<Word> brute;
            for (uint32_t other = 0; other < (1u << n); ++other) {
                if (distance(w, Word(other, n)) == 2) brute.insert(Word(other, n));
            }
            if (std::set<Word>(fast.begin(), fast.end()) != brute) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("compact index encode/decode") {
    CHECK(decode_compact(CompactIndex{0, 0}, 24) == Word::zero(24));
    CHECK(decode_compact(CompactIndex{0, 1}, 24) == Word::parse("000000000000000000000001"));

    for (int n : {2, 5, 8, 13, 16}) {
        for (int parity = 0; parity < 2; ++parity) {
            std::set<uint32_t> seen;
            for (uint32_t bits = 0; bits < (1u << n); ++bits) {
                const Word w(bits, n);
                if (w.parity() != parity) continue;
                const CompactIndex ci = encode_compact(w);
                CHECK(ci.parity == parity);
                CHECK(ci.value < (1u << (n - 1)));
                CHECK(decode_compact(ci, n) == w);
                seen.insert(ci.value);
            }
            CHECK(seen.size() == (1u << (n - 1)));  // bijection onto the index space
        }
    }
    CHECK_THROWS_AS(decode_compact(CompactIndex{1u << 10, 0}, 8), ArgumentError);
}

TEST_CASE("triple-concatenation distance inequalities hold exhaustively") {
    // rho((u,v,w),(u',v',w')) >= rho(u+v+w, u'+v'+w')
    //                         >= rho(u,u') + rho(v+w, v'+w')
    //                         >= rho(v,v') + rho(u+w, u'+w')
    uint64_t violations = 0;
    for (int m : {2, 3, 4}) {
        const uint32_t block = uint32_t{1} << m;
        const uint32_t total = block * block * block;
        for (uint32_t a = 0; a < total; ++a) {
            const uint32_t u = a >> (2 * m), v = (a >> m) & (block - 1), w = a & (block - 1);
            for (uint32_t b = 0; b < total; ++b) {
                const uint32_t up = b >> (2 * m), vp = (b >> m) & (block - 1),
                               wp = b & (block - 1);
                const int lhs = std::popcount(a ^ b);
                if (lhs < std::popcount((u ^ v ^ w) ^ (up ^ vp ^ wp))) ++violations;
                if (lhs < std::popcount(u ^ up) + std::popcount((v ^ w) ^ (vp ^ wp))) ++violations;
                if (lhs < std::popcount(v ^ vp) + std::popcount((u ^ w) ^ (up ^ wp))) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}
