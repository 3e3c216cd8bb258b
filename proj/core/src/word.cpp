#include "hcp/word.hpp"

namespace hcp {

Word Word::parse(std::string_view text) {
    const int n = static_cast<int>(text.size());
    if (n < 1 || n > 32) throw ArgumentError("word text must have 1..32 characters");
    uint32_t bits = 0;
    for (int i = 0; i < n; ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1')
            throw ArgumentError(std::string("invalid character '") + ch + "' in word");
        bits = (bits << 1) | static_cast<uint32_t>(ch - '0');
    }
    return Word(bits, n);
}

std::string Word::to_string() const {
    std::string out(static_cast<size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((bits_ >> (length_ - 1 - i)) & 1u) out[static_cast<size_t>(i)] = '1';
    }
    return out;
}

std::vector<Word> neighbors_h1(Word v) {
    const int n = v.length();
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(n));
    for (int pos = 1; pos <= n; ++pos) out.push_back(v ^ Word::unit(pos, n));
    return out;
}

std::vector<Word> neighbors_h2(Word v) {
    const int n = v.length();
    if (n < 2) throw ArgumentError("neighbors_h2 needs length >= 2");
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int p = 1; p <= n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            out.push_back(v ^ Word::unit(p, n) ^ Word::unit(q, n));
        }
    }
    return out;
}

}  // namespace hcp
