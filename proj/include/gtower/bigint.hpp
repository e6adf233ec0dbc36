#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtower {

// Coefficients and word exponents are exact arbitrary-precision integers:
// the quotient moduli 2^i / 3^i outgrow machine words immediately.
using BigInt = boost::multiprecision::cpp_int;

// base^exp, exact.
inline BigInt pow_int(unsigned base, std::uint64_t exp) {
    BigInt acc = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) acc *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return acc;
}

}  // namespace gtower
