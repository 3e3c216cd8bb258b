#include "hcp/matrix.hpp"

#include <sstream>

namespace hcp {

ParameterMatrix::ParameterMatrix(std::initializer_list<std::initializer_list<int64_t>> rows)
    : ParameterMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k_)
            throw ArgumentError("parameter matrix must be square");
        int j = 0;
        for (int64_t v : row) at(i, j++) = v;
        ++i;
    }
}

int64_t ParameterMatrix::row_sum(int i) const {
    int64_t s = 0;
    for (int j = 0; j < k_; ++j) s += at(i, j);
    return s;
}

bool ParameterMatrix::rows_sum_to(int64_t degree) const {
    for (int i = 0; i < k_; ++i) {
        if (row_sum(i) != degree) return false;
    }
    return true;
}

ParameterMatrix ParameterMatrix::parse(std::string_view text) {
    std::vector<std::vector<int64_t>> rows(1);
    std::string num;
    auto flush = [&] {
        if (num.empty()) throw ArgumentError("empty entry in matrix text");
        rows.back().push_back(std::stoll(num));
        num.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch == ';') {
            flush();
            rows.emplace_back();
        } else if (ch == ' ') {
            continue;
        } else if ((ch >= '0' && ch <= '9') || ch == '-') {
            num.push_back(ch);
        } else {
            throw ArgumentError(std::string("invalid character '") + ch + "' in matrix text");
        }
    }
    flush();
    const int k = static_cast<int>(rows.size());
    ParameterMatrix m(k);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != k)
            throw ArgumentError("matrix text is not square");
        for (int j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string ParameterMatrix::to_compact_string() const {
    std::ostringstream os;
    for (int i = 0; i < k_; ++i) {
        if (i) os << ';';
        for (int j = 0; j < k_; ++j) {
            if (j) os << ',';
            os << at(i, j);
        }
    }
    return os.str();
}

std::string ParameterMatrix::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < k_; ++i) {
        os << '(';
        for (int j = 0; j < k_; ++j) {
            if (j) os << ',';
            os << at(i, j);
        }
        os << ')';
    }
    os << ')';
    return os.str();
}

ParameterMatrix transform_h1_to_h2(const ParameterMatrix& s, int n) {
    const int k = s.k();
    ParameterMatrix out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int64_t v = 0;
            for (int t = 0; t < k; ++t) v += s.at(i, t) * s.at(t, j);
            if (i == j) v -= n;
            if (v < 0)
                throw IntegralityError("S^2 - nE has a negative entry at (" + std::to_string(i) +
                                       "," + std::to_string(j) + "): " + std::to_string(v));
            if (v & 1)
                throw IntegralityError("S^2 - nE has an odd entry at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "): " + std::to_string(v));
            out.at(i, j) = v / 2;
        }
    }
    return out;
}

int64_t eigenvalue_of(const ParameterMatrix& p) {
    if (p.k() != 2) throw ArgumentError("eigenvalue_of expects a 2x2 matrix");
    if (p.row_sum(0) != p.row_sum(1))
        throw ArgumentError("eigenvalue_of expects constant row sums");
    const int64_t lambda = p.at(0, 0) - p.at(1, 0);
    // With equal row sums, a - c = d - b automatically; keep the identity visible.
    if (lambda != p.at(1, 1) - p.at(0, 1))
        throw ArgumentError("eigenvalue identity a-c = d-b failed");
    return lambda;
}

}  // namespace hcp
