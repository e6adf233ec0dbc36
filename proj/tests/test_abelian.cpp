#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtower/abelian.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"
#include "support.hpp"

using namespace gtower;

TEST_CASE("exponent equation solver") {
    CHECK(solve_exponent_equation(-8, 1, 2) == 3);
    CHECK(solve_exponent_equation(-6, 2, 3) == 1);
    CHECK(solve_exponent_equation(-2, 1, 2) == 1);
    CHECK(solve_exponent_equation(8, -1, 2) == 3);
    CHECK(solve_exponent_equation(-81, 1, 3) == 4);

    CHECK(solve_exponent_equation(5, 3, 2) == std::nullopt);    // 3 does not divide -5
    CHECK(solve_exponent_equation(-1, 1, 2) == std::nullopt);   // would need x = 0
    CHECK(solve_exponent_equation(-12, 1, 2) == std::nullopt);  // 12 is no pure power of 2
    CHECK(solve_exponent_equation(0, 5, 2) == std::nullopt);
    CHECK(solve_exponent_equation(7, 0, 2) == std::nullopt);
    CHECK(solve_exponent_equation(2, 1, 2) == std::nullopt);    // negative ratio
    CHECK_THROWS_AS(solve_exponent_equation(-8, 1, 1), PreconditionViolated);

    // Big-integer targets resolve exactly.
    BigInt big = -pow_int(2, 200);
    CHECK(solve_exponent_equation(big, 1, 2) == 200);
    CHECK(solve_exponent_equation(big + 1, 1, 2) == std::nullopt);
}

TEST_CASE("collect sums letters of one factor") {
    AbelianElement e = collect(parse_word("a[3,0]^2 a[3,1]^-1 a[3,0]^3"));
    CHECK(e == AbelianElement{Side::A, 3, 5, -1});
    CHECK(collect(parse_word("b[7,1]^4")) == AbelianElement{Side::B, 7, 0, 4});

    CHECK_THROWS_AS(collect(parse_word("a[1,0] a[2,0]")), MixedFactor);
    CHECK_THROWS_AS(collect(parse_word("a[1,0] b[1,0]")), MixedFactor);
    CHECK_THROWS_AS(collect(parse_word("a[1,0] t[1]")), MixedFactor);
    CHECK_THROWS_AS(collect(GroupWord{}), MixedFactor);

    AbelianElement x{Side::A, 5, 1, 2};
    CHECK(x + AbelianElement{Side::A, 5, -1, 1} == AbelianElement{Side::A, 5, 0, 3});
    CHECK(-x == AbelianElement{Side::A, 5, -1, -2});
    CHECK_THROWS_AS((x + AbelianElement{Side::B, 5, 0, 0}), MixedFactor);
}

TEST_CASE("factor triviality matches the explicit quotients") {
    MockBackend mock;
    for (std::uint64_t n = 1; n <= 20; ++n) {
        for (int l0 = -9; l0 <= 9; ++l0) {
            for (int l1 = -9; l1 <= 9; ++l1) {
                for (Side side : {Side::A, Side::B}) {
                    AbelianElement e{side, n, l0, l1};
                    bool expected = tsup::mock_quotient_trivial(side, n, l0, l1);
                    CHECK_MESSAGE(is_trivial(mock, e) == expected,
                                  side_name(side), "[", n, "] with (", l0, ",", l1, ")");
                }
            }
        }
    }
}

TEST_CASE("larger exponents pick the relation index exactly") {
    MockBackend mock;
    // n = 16 is the 4th element of the first set: relation g1 = 2^4 g0.
    CHECK(is_trivial(mock, {Side::A, 16, -16, 1}));
    CHECK(is_trivial(mock, {Side::B, 16, -16, 1}));
    CHECK_FALSE(is_trivial(mock, {Side::A, 16, -8, 1}));
    CHECK_FALSE(is_trivial(mock, {Side::A, 16, -32, 1}));
    // n = 10 is the 3rd element of the second set: base 3 on the A side,
    // base 2 on the B side.
    CHECK(is_trivial(mock, {Side::A, 10, -27, 1}));
    CHECK_FALSE(is_trivial(mock, {Side::B, 10, -27, 1}));
    CHECK(is_trivial(mock, {Side::B, 10, -8, 1}));
    CHECK_FALSE(is_trivial(mock, {Side::A, 10, -8, 1}));
}

TEST_CASE("triviality over the dovetailer is budget-aware") {
    // Under the bundled table the first set enumerates [1, 4] and the second
    // [2, 5]; factor 4 sits at index 2 of the first set.
    DovetailBackend roomy(DovetailBackend::bundled_table(), 1000);
    CHECK(is_trivial(roomy, {Side::A, 4, -4, 1}));
    CHECK(is_trivial(roomy, {Side::B, 4, -4, 1}));
    CHECK_FALSE(is_trivial(roomy, {Side::A, 4, -2, 1}));  // index 1 belongs to factor 1

    // Within 10 steps index 2 of either family is still unknown, and the
    // answer depends on it.
    DovetailBackend tight(DovetailBackend::bundled_table(), 10);
    CHECK_THROWS_AS(is_trivial(tight, {Side::B, 4, -4, 1}), BudgetExhausted);
    // No budget is needed when the exponent equation already fails.
    CHECK_FALSE(is_trivial(tight, {Side::A, 7, -3, 1}));
    CHECK(is_trivial(tight, {Side::A, 7, 0, 0}));
}

TEST_CASE("cyclic coefficients at enumerated factors") {
    MockBackend mock;
    CHECK(cyclic_coefficient(mock, {Side::A, 4, 1, 2}, 1) == 5);
    CHECK(cyclic_coefficient(mock, {Side::B, 4, 0, 1}, 1) == 2);
    CHECK(cyclic_coefficient(mock, {Side::A, 8, -1, 3}, 2) == 11);
    CHECK(cyclic_coefficient(mock, {Side::A, 40, 0, 1}, 10) == 1024);
    CHECK_THROWS_AS(cyclic_coefficient(mock, {Side::A, 5, 1, 0}, 1), PreconditionViolated);
    CHECK_THROWS_AS(cyclic_coefficient(mock, {Side::A, 4, 1, 0}, 2), PreconditionViolated);
}

TEST_CASE("coordinate isomorphism probe") {
    MockBackend mock;
    CHECK(iso_probe(mock, 4, 0) == IsoVerdict::Isomorphism);      // first set: same relation
    CHECK(iso_probe(mock, 3, 0) == IsoVerdict::Isomorphism);      // unenumerated: both free
    CHECK(iso_probe(mock, 1, 0) == IsoVerdict::Isomorphism);
    CHECK(iso_probe(mock, 6, 0) == IsoVerdict::NotIsomorphism);   // second set: bases differ
    CHECK(iso_probe(mock, 2, 0) == IsoVerdict::NotIsomorphism);
    CHECK_THROWS_AS(iso_probe(mock, 0, 0), InvalidIndex);

    CHECK(iso_verdict_name(IsoVerdict::Isomorphism) == std::string("isomorphism"));
    CHECK(iso_verdict_name(IsoVerdict::NotIsomorphism) == std::string("not-isomorphism"));
    CHECK(iso_verdict_name(IsoVerdict::Unknown) == std::string("unknown"));

    DovetailBackend dt(DovetailBackend::bundled_table(), 1000);
    CHECK(iso_probe(dt, 2, 1000) == IsoVerdict::NotIsomorphism);  // machine 2 rejects
    CHECK(iso_probe(dt, 999999, 50) == IsoVerdict::Unknown);      // not settled in 50 steps
}
