#ifndef HCP_MATRIX_HPP
#define HCP_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hcp/error.hpp"

namespace hcp {

/// A k x k parameter matrix of a perfect coloring: entry (i,j) is the
/// number of color-j neighbors of any color-i vertex.
class ParameterMatrix {
  public:
    explicit ParameterMatrix(int k) : k_(k), e_(static_cast<size_t>(k) * k, 0) {
        if (k < 1) throw ArgumentError("matrix dimension must be positive");
    }

    /// Row-major construction, e.g. {{23,253},{3,273}}.
    ParameterMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

    int k() const { return k_; }
    int64_t at(int i, int j) const { return e_[static_cast<size_t>(i) * k_ + j]; }
    int64_t& at(int i, int j) { return e_[static_cast<size_t>(i) * k_ + j]; }

    int64_t row_sum(int i) const;
    /// True iff every row sums to degree.
    bool rows_sum_to(int64_t degree) const;

    /// Rows separated by ';', entries by ',': "23,253;3,273".
    static ParameterMatrix parse(std::string_view text);
    std::string to_compact_string() const;  // the parse format
    /// Paper style for 2x2: ((a,b)(c,d)); multi-line grid otherwise.
    std::string to_string() const;

    bool operator==(const ParameterMatrix&) const = default;

  private:
    int k_;
    std::vector<int64_t> e_;
};

/// The parameter matrix (S^2 - nE)/2 of the coloring that an H(n)-perfect
/// coloring with matrix S induces on HH(n). Throws IntegralityError if any
/// entry of S^2 - nE is odd or negative.
ParameterMatrix transform_h1_to_h2(const ParameterMatrix& s, int n);

/// Second eigenvalue a-c (= d-b) of a 2x2 matrix with equal row sums.
int64_t eigenvalue_of(const ParameterMatrix& p);

}  // namespace hcp

#endif
