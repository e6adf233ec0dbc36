#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtower {

// Enumeration could not answer within the step budget (or past the end of a
// finite prefix).  Means "unknown yet", never "no such element".
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Index arguments are 1-based and positive.
struct InvalidIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Abelian collection applied across distinct free factors.
struct MixedFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stable letter appeared where only base-alphabet letters are allowed.
struct StableLetterPresent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionViolated : std::logic_error {
    using std::logic_error::logic_error;
};

// A conjugacy oracle's find_conjugator result failed the defining equality.
struct OracleInconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership decision requested from a backend that only semi-decides.
struct UndecidableBackend : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input text
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace gtower
