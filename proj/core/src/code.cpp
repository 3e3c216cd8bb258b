#include "hcp/code.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>

namespace hcp {

BinaryCode::BinaryCode(int length, gf2::Basis basis, uint32_t offset)
    : length_(length), basis_(std::move(basis)), offset_(basis_.reduce(offset)) {
    if (length < 1 || length > 32) throw ArgumentError("code length must be in [1,32]");
    const uint32_t limit_mask =
        length == 32 ? ~uint32_t{0} : ((uint32_t{1} << length) - 1);
    if ((offset_ | limit_mask) != limit_mask)
        throw ArgumentError("code offset has bits beyond its length");
    for (uint32_t row : basis_.rows()) {
        if ((row | limit_mask) != limit_mask)
            throw ArgumentError("basis row has bits beyond the code length");
    }
}

std::vector<Word> BinaryCode::basis_words() const {
    std::vector<Word> out;
    for (uint32_t row : basis_.rows()) out.emplace_back(row, length_);
    return out;
}

bool BinaryCode::contains(Word w) const {
    if (w.length() != length_) return false;
    return basis_.reduce(w.bits() ^ offset_) == 0;
}

bool BinaryCode::subset_of(const BinaryCode& other) const {
    if (length_ != other.length_) return false;
    for (uint32_t row : basis_.rows()) {
        if (!other.basis_.contains(row)) return false;
    }
    return other.basis_.reduce(offset_ ^ other.offset_) == 0;
}

std::vector<Word> BinaryCode::words() const {
    std::vector<Word> out;
    out.reserve(size());
    for_each_word([&](uint32_t w) { out.emplace_back(w, length_); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Cyclic permutation of textual positions 1..7 (bits 7..1 of a length-8
// word); position 8 (bit 0) stays fixed.
uint32_t rotate_first_seven(uint32_t bits) {
    const uint32_t hi = (bits >> 1) & 0x7Fu;
    const uint32_t lo = bits & 1u;
    return ((((hi << 1) | (hi >> 6)) & 0x7Fu) << 1) | lo;
}

}  // namespace

BinaryCode cyclic_closure_code(std::span<const Word> seeds) {
    if (seeds.empty()) throw ArgumentError("cyclic closure needs at least one seed");
    gf2::Basis basis;
    std::vector<uint32_t> work;
    for (Word s : seeds) {
        if (s.length() != 8) throw ArgumentError("cyclic closure seeds must have length 8");
        work.push_back(s.bits());
    }
    while (!work.empty()) {
        const uint32_t v = work.back();
        work.pop_back();
        if (basis.insert(v)) work.push_back(rotate_first_seven(v));
    }
    return BinaryCode(8, basis);
}

BinaryCode cyclic_closure_code(Word seed) {
    return cyclic_closure_code(std::span<const Word>(&seed, 1));
}

BinaryCode turyn_compose(const BinaryCode& cx, const BinaryCode& cyz) {
    if (cx.length() != cyz.length()) throw ArgumentError("turyn_compose: length mismatch");
    if (!cx.linear() || !cyz.linear())
        throw ArgumentError("turyn_compose: both codes must be linear");
    const int n = cx.length();
    if (3 * n > 32) throw ArgumentError("turyn_compose: 3n exceeds 32 bits");
    gf2::Basis basis;
    for (uint32_t x : cx.basis().rows()) {
        basis.insert((x << (2 * n)) | (x << n) | x);  // (x, x, x)
    }
    for (uint32_t y : cyz.basis().rows()) {
        basis.insert((y << (2 * n)) | y);             // (y, 0, y)
        basis.insert((y << n) | y);                   // (0, z, z)
    }
    return BinaryCode(3 * n, basis);
}

int min_distance(const BinaryCode& c) {
    if (c.rank() == 0) throw ArgumentError("min_distance needs at least 2 words");
    int best = std::numeric_limits<int>::max();
    gf2::for_each_in_span(c.basis().rows(), 0u, [&](uint32_t w) {
        if (w == 0) return;
        const int wt = std::popcount(w);
        if (wt < best) best = wt;
    });
    return best;
}

int min_distance(std::span<const Word> words) {
    if (words.size() < 2) throw ArgumentError("min_distance needs at least 2 words");
    int best = std::numeric_limits<int>::max();
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = i + 1; j < words.size(); ++j) {
            best = std::min(best, distance(words[i], words[j]));
        }
    }
    return best;
}

std::vector<Word> neighborhood(std::span<const Word> words) {
    std::vector<Word> out;
    out.reserve(words.size() * (words.empty() ? 0 : words.front().length()));
    for (Word w : words) {
        for (int pos = 1; pos <= w.length(); ++pos) out.push_back(w ^ Word::unit(pos, w.length()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> neighborhood(const BinaryCode& c) {
    std::vector<Word> all = c.words();
    return neighborhood(std::span<const Word>(all));
}

std::vector<BinaryCode> coset_partition(const BinaryCode& sub, const BinaryCode& super) {
    if (sub.length() != super.length())
        throw ArgumentError("coset_partition: length mismatch");
    if (!sub.linear()) throw ArgumentError("coset_partition: sub must be linear");
    for (uint32_t row : sub.basis().rows()) {
        if (!super.basis().contains(row))
            throw ArgumentError("coset_partition: sub is not contained in super");
    }
    // Extend sub's basis to super's; the extra rows generate the quotient.
    gf2::Basis extended = sub.basis();
    std::vector<uint32_t> quotient;
    for (uint32_t row : super.basis().rows()) {
        if (extended.insert(row)) quotient.push_back(row);
    }
    std::vector<BinaryCode> cosets;
    cosets.reserve(uint64_t{1} << quotient.size());
    gf2::for_each_in_span(quotient, super.offset().bits(), [&](uint32_t rep) {
        cosets.emplace_back(sub.length(), sub.basis(), rep);
    });
    std::sort(cosets.begin(), cosets.end(), [](const BinaryCode& a, const BinaryCode& b) {
        return a.offset().bits() < b.offset().bits();
    });
    return cosets;
}

int set_distance(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() != b.length()) throw ArgumentError("set_distance: length mismatch");
    gf2::Basis combined = a.basis();
    for (uint32_t row : b.basis().rows()) combined.insert(row);
    const uint32_t offset = combined.reduce(a.offset().bits() ^ b.offset().bits());
    int best = std::numeric_limits<int>::max();
    gf2::for_each_in_span(combined.rows(), offset, [&](uint32_t w) {
        const int wt = std::popcount(w);
        if (wt < best) best = wt;
    });
    return best;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("code verification failed: " + what);
}

BinaryCode closed_hamming_code(const char* seed_text, const char* name) {
    // The smallest rotation-closed code containing the seed has only 8
    // words; the required intersection {0^8, 1^8} of the two codes forces
    // the all-ones word in, which completes the (8,16,4) code.
    const Word seeds[2] = {Word::parse(seed_text), Word::all_ones(8)};
    BinaryCode c = cyclic_closure_code(std::span<const Word>(seeds, 2));
    require(c.size() == 16, std::string(name) + " size");
    require(min_distance(c) == 4, std::string(name) + " min distance");
    return c;
}

}  // namespace

BinaryCode build_c8() { return closed_hamming_code("00101110", "C8"); }

BinaryCode build_c8_prime() { return closed_hamming_code("01001110", "C8'"); }

BinaryCode build_b8() {
    gf2::Basis basis;
    for (int b = 1; b < 8; ++b) basis.insert((uint32_t{1} << b) | 1u);
    BinaryCode c(8, basis);
    require(c.size() == 128, "B8 size");
    require(min_distance(c) == 2, "B8 min distance");
    require(build_c8_prime().subset_of(c), "B8 contains C8'");
    return c;
}

BinaryCode build_f() {
    BinaryCode f = turyn_compose(build_c8(), build_c8_prime());
    require(f.size() == 4096, "F size");
    require(min_distance(f) == 8, "F min distance");
    return f;
}

BinaryCode build_d() {
    BinaryCode d = turyn_compose(build_c8(), build_b8());
    require(d.size() == uint64_t{1} << 18, "D size");
    require(min_distance(d) == 4, "D min distance");
    return d;
}

BinaryCode build_c16() {
    // C16 = {(y, y+z) : y in B8, z in C8'}. The second factor could a
    // priori be either seed code; the parameter checks below fail loudly
    // if this choice were wrong.
    const BinaryCode b8 = build_b8();
    const BinaryCode c8p = build_c8_prime();
    gf2::Basis basis;
    for (uint32_t y : b8.basis().rows()) basis.insert((y << 8) | y);
    for (uint32_t z : c8p.basis().rows()) basis.insert(z);
    BinaryCode c(16, basis);
    require(c.size() == uint64_t{1} << 11, "C16 size");
    require(min_distance(c) == 4, "C16 min distance");
    return c;
}

BinaryCode build_l() {
    const BinaryCode b8 = build_b8();
    const BinaryCode c16 = build_c16();
    gf2::Basis basis;
    for (uint32_t x : b8.basis().rows()) basis.insert(x << 16);
    for (uint32_t w : c16.basis().rows()) basis.insert(w);
    BinaryCode l(24, basis);
    require(l.size() == uint64_t{1} << 18, "L size");
    for (uint32_t row : l.basis().rows()) {
        require((std::popcount(row) & 1) == 0, "L is even-weight");
    }
    return l;
}

BinaryCode build_n() {
    const BinaryCode b8 = build_b8();
    gf2::Basis basis;
    for (uint32_t b : b8.basis().rows()) {
        basis.insert(b << 16);
        basis.insert(b << 8);
        basis.insert(b);
    }
    const uint32_t block = Word::parse("00000001").bits();
    const uint32_t offset = (block << 16) | (block << 8) | block;
    BinaryCode n(24, basis, offset);
    require(n.size() == uint64_t{1} << 21, "N size");
    require(n.offset().weight() == 3, "N offset weight");
    return n;
}

void write_code(const BinaryCode& c, std::ostream& os) {
    os << "code n=" << c.length() << " k=" << c.rank() << " offset="
       << (c.linear() ? std::string("-") : c.offset().to_string()) << "\n";
    for (const Word& w : c.basis_words()) os << w.to_string() << "\n";
    if (!os) throw IoError("failed to write code");
}

BinaryCode read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw IoError("empty code file");
    int n = 0, k = 0;
    char offset_buf[40] = {0};
    if (std::sscanf(header.c_str(), "code n=%d k=%d offset=%39s", &n, &k, offset_buf) != 3)
        throw IoError("malformed code header: " + header);
    if (n < 1 || n > 32 || k < 0 || k > n) throw IoError("code header out of range");
    gf2::Basis basis;
    std::string line;
    int rows = 0;
    while (rows < k && std::getline(is, line)) {
        if (line.empty()) continue;
        Word w = Word::parse(line);
        if (w.length() != n) throw IoError("basis word length does not match header");
        if (!basis.insert(w.bits())) throw IoError("dependent basis rows in code file");
        ++rows;
    }
    if (rows != k) throw IoError("code file ends before " + std::to_string(k) + " basis rows");
    uint32_t offset = 0;
    const std::string offset_text(offset_buf);
    if (offset_text != "-") {
        Word w = Word::parse(offset_text);
        if (w.length() != n) throw IoError("offset length does not match header");
        offset = w.bits();
    }
    return BinaryCode(n, basis, offset);
}

std::string code_name_list() { return "c8,c8p,b8,f,d,c16,l,n"; }

BinaryCode build_named_code(const std::string& name) {
    if (name == "c8") return build_c8();
    if (name == "c8p") return build_c8_prime();
    if (name == "b8") return build_b8();
    if (name == "f") return build_f();
    if (name == "d") return build_d();
    if (name == "c16") return build_c16();
    if (name == "l") return build_l();
    if (name == "n") return build_n();
    throw ArgumentError("unknown code name '" + name + "' (expected one of " + code_name_list() +
                        ")");
}

}  // namespace hcp
