#include <catch2/catch_amalgamated.hpp>

#include "iroa/field.hpp"

using namespace iroa;

namespace {
const std::vector<long long> kPrimePowers64 = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19, 23,
                                               25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61,
                                               64};
}

TEST_CASE("field construction") {
    const Field f2 = Field::create(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<int>{0, 1});

    const Field f4 = Field::create(2, 2, std::vector<int>{1, 1, 1});
    CHECK(f4.q() == 4);

    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_MATCHES(Field::create(2, 2, std::vector<int>{1, 0, 1}), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>([](const auto& e) {
                             return e.code() == errc::reducible_modulus;
                         }));
    CHECK_THROWS_MATCHES(Field::create(4, 1), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::not_prime; }));
    CHECK_THROWS_MATCHES(Field::create(2, 7), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::unsupported_order; }));
    CHECK_THROWS(Field::of_order(6));
    CHECK(Field::of_order(49).p() == 7);
    // Explicit modulus lets larger orders through: F_128 with x^7 + x + 1.
    const Field f128 = Field::create(2, 7, std::vector<int>{1, 1, 0, 0, 0, 0, 0, 1});
    CHECK(f128.q() == 128);
    CHECK(f128.mul(2, 64) == 3);  // x * x^6 = x^7 = x + 1
}

TEST_CASE("field arithmetic on the worked examples") {
    const Field f4 = Field::of_order(4);
    const Field f5 = Field::of_order(5);

    CHECK(f4.add(2, 3) == 1);  // x + (x+1) = 1
    CHECK(f5.add(3, 4) == 2);
    CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
    CHECK(f4.mul(2, 3) == 1);  // x(x+1) = 1
    CHECK(f5.inv(2) == 3);
    CHECK(f4.inv(2) == 3);
    for (long long q : {2ll, 3ll, 4ll, 5ll, 9ll}) {
        const Field f = Field::of_order(q);
        CHECK(f.inv(1) == 1);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
        }
    }
    const Field f5b = Field::of_order(5);
    CHECK_THROWS_MATCHES(f5b.inv(0), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::division_by_zero; }));
}

TEST_CASE("element layer enforces field agreement") {
    const Field f4 = Field::of_order(4);
    const Field f5 = Field::of_order(5);
    const Element a = f4.element(2), b = f4.element(3);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a / a).value() == 1);
    CHECK((-a + a).value() == 0);
    CHECK(a.inverse().value() == 3);
    CHECK_THROWS_MATCHES(a + f5.element(1), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::field_mismatch; }));
    CHECK_THROWS(f4.element(4));
}

TEST_CASE("canonical element order") {
    const Field f4 = Field::of_order(4);
    const auto els = f4.elements();
    REQUIRE(els.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(els[i].value() == i);
    CHECK(Field::of_order(2).elements().size() == 2);
    CHECK(Field::of_order(3).elements().size() == 3);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (long long q : kPrimePowers64) {
        if (q > 16) continue;
        const Field f = Field::of_order(q);
        INFO("q = " << q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative order and involution of inverse up to q = 64") {
    for (long long q : kPrimePowers64) {
        const Field f = Field::of_order(q);
        INFO("q = " << q);
        for (int a = 1; a < q; ++a) {
            REQUIRE(f.pow(a, q - 1) == 1);
            REQUIRE(f.inv(f.inv(a)) == a);
        }
    }
}
