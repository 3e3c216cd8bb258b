#ifndef HCP_ERROR_HPP
#define HCP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hcp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad lengths, ranges, ...).
struct ArgumentError : Error {
    using Error::Error;
};

/// Reading or writing a file (or stream) failed or the content is malformed.
struct IoError : Error {
    using Error::Error;
};

/// A constructed object failed its own verification (wrong size, distance, ...).
struct ConsistencyError : Error {
    using Error::Error;
};

/// (S^2 - nE)/2 does not exist as a nonnegative integer matrix.
struct IntegralityError : Error {
    using Error::Error;
};

/// Two sets that must be disjoint share a word.
struct DisjointnessError : Error {
    DisjointnessError(std::string first, std::string second, std::string common_word)
        : Error("sets '" + first + "' and '" + second + "' overlap at " + common_word),
          first_set(std::move(first)),
          second_set(std::move(second)),
          common(std::move(common_word)) {}

    std::string first_set;
    std::string second_set;
    std::string common;  // textual word shared by both sets
};

}  // namespace hcp

#endif
