#pragma once

// The rank-2 abelian building blocks.  Factor (A, n) is free abelian on
// a[n,0], a[n,1] unless n is enumerated: as the i-th element of the first
// set it gains a[n,1] = 2^i a[n,0]; as the i-th element of the second set,
// a[n,1] = 3^i a[n,0].  The B family uses base 2 for both memberships - that
// asymmetry is what the stable letters later exploit.  Triviality reduces to
// one exponential equation plus one enumeration probe.

#include <cstdint>
#include <optional>

#include "gtower/bigint.hpp"
#include "gtower/errors.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"

namespace gtower {

class GroupWord;

// A collected element lambda0 * g[n,0] + lambda1 * g[n,1] of one factor.
struct AbelianElement {
    Side side;
    std::uint64_t n;
    BigInt lambda0;
    BigInt lambda1;

    bool is_zero_pair() const { return lambda0 == 0 && lambda1 == 0; }

    AbelianElement& operator+=(const AbelianElement& o);  // MixedFactor across factors
    AbelianElement operator+(const AbelianElement& o) const;
    AbelianElement operator-() const;

    bool operator==(const AbelianElement&) const = default;
};

// Sum a nonempty single-factor word into coefficients; MixedFactor when the
// word touches two factors or a stable letter.
AbelianElement collect(const GroupWord& word);

// Least x >= 1 with lambda0 + lambda1 * base^x == 0, if any (it is unique).
std::optional<std::uint64_t> solve_exponent_equation(const BigInt& lambda0,
                                                     const BigInt& lambda1,
                                                     unsigned base);

// Word problem in the (possibly quotiented) factor of elem.  Exact for
// decidable backends; BudgetExhausted when the one needed membership probe
// is still unresolved.
bool is_trivial(SetPairBackend& backend, const AbelianElement& elem);

// At n = element_at(N, i) every factor element is a multiple of g[n,0];
// this returns that multiple, lambda0 + lambda1 * 2^i (both families use
// base 2 on first-set members).  PreconditionViolated otherwise.
BigInt cyclic_coefficient(SetPairBackend& backend, const AbelianElement& elem, std::uint64_t i);

enum class IsoVerdict : unsigned char { Isomorphism, NotIsomorphism, Unknown };

const char* iso_verdict_name(IsoVerdict v);

// Does a[n,m] |-> b[n,m] extend to an isomorphism of the two factors at n?
// Yes iff n avoids the second set; over a semi-deciding backend the probe
// may come back Unknown within `budget`.
IsoVerdict iso_probe(SetPairBackend& backend, std::uint64_t n, std::uint64_t budget);

}  // namespace gtower
