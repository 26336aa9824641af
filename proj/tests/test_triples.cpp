#include <doctest.h>

#include <array>

#include "holes/triples.hpp"
#include "oracles.hpp"

using namespace holes;

namespace {

std::array<long long, 3> values(const Triple& t) { return {t.a, t.b, t.c}; }

}  // namespace

TEST_CASE("is_pythagorean is order-insensitive and exact") {
    CHECK(is_pythagorean(3, 4, 5));
    CHECK(is_pythagorean(4, 3, 5));
    CHECK(is_pythagorean(5, 4, 3));
    CHECK_FALSE(is_pythagorean(2, 3, 4));
    CHECK_FALSE(is_pythagorean(1, 1, 1));
    CHECK_THROWS_AS(is_pythagorean(0, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(is_pythagorean(3, -4, 5), std::invalid_argument);
    CHECK_THROWS_AS(is_pythagorean(3, 4, 4'000'000'000LL), std::invalid_argument);
}

TEST_CASE("the sixteen primitives with c <= 100") {
    auto got = primitive_triples_up_to(100);
    REQUIRE(got.size() == 16);
    std::vector<std::array<long long, 3>> expected = {
        {3, 4, 5},    {5, 12, 13},  {8, 15, 17},  {7, 24, 25},  {20, 21, 29},  {12, 35, 37},
        {9, 40, 41},  {28, 45, 53}, {11, 60, 61}, {16, 63, 65}, {33, 56, 65},  {48, 55, 73},
        {13, 84, 85}, {36, 77, 85}, {39, 80, 89}, {65, 72, 97},
    };
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(values(got[i]) == expected[i]);
        CHECK(got[i].primitive);
        CHECK(got[i].scale == 1);
    }
}

TEST_CASE("generator boundary cases") {
    auto only = primitive_triples_up_to(5);
    REQUIRE(only.size() == 1);
    CHECK(values(only[0]) == std::array<long long, 3>{3, 4, 5});

    auto to30 = primitive_triples_up_to(30);
    REQUIRE(to30.size() == 5);
    CHECK(values(to30[4]) == std::array<long long, 3>{20, 21, 29});

    CHECK(primitive_triples_up_to(4).empty());
    CHECK_THROWS_AS(primitive_triples_up_to(4'000'000'000LL), std::invalid_argument);
}

TEST_CASE("generator agrees with the brute-force scan up to 500") {
    auto got = primitive_triples_up_to(500);
    auto want = oracles::brute_force_primitive_triples(500);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(values(got[i]) == want[i]);
}

TEST_CASE("scaling closure and root/scale round trip") {
    for (const Triple& p : primitive_triples_up_to(100))
        for (long long k = 1; k <= 10; ++k) {
            CHECK(is_pythagorean(k * p.a, k * p.b, k * p.c));
            Triple scaled = make_triple(k * p.b, k * p.a, k * p.c);  // unsorted on purpose
            CHECK(scaled.scale == k);
            CHECK(scaled.root_a == p.a);
            CHECK(scaled.root_b == p.b);
            CHECK(scaled.root_c == p.c);
            CHECK(scaled.scale * scaled.root_a == scaled.a);
            CHECK(scaled.scale * scaled.root_b == scaled.b);
            CHECK(scaled.scale * scaled.root_c == scaled.c);
            CHECK(scaled.primitive == (k == 1));
        }
}

TEST_CASE("make_triple rejects non-Pythagorean input naming the equation") {
    CHECK_THROWS_WITH_AS(make_triple(2, 3, 4), doctest::Contains("2^2 + 3^2 != 4^2"),
                         std::invalid_argument);
}

TEST_CASE("t-type table and inheritance under scaling") {
    auto type_of = [](long long a, long long b, long long c) {
        return to_string(classify(make_triple(a, b, c)));
    };
    CHECK(type_of(3, 4, 5) == "t1");
    CHECK(type_of(6, 8, 10) == "t1");
    CHECK(type_of(9, 12, 15) == "t1");
    CHECK(type_of(20, 21, 29) == "t2");
    CHECK(type_of(40, 42, 58) == "t2");
    CHECK(type_of(28, 45, 53) == "t3");
    CHECK(type_of(48, 55, 73) == "t4");
    CHECK(type_of(65, 72, 97) == "t5");
}

TEST_CASE("e-ranks follow ascending (c, a) over the non-t primitives") {
    auto type_of = [](long long a, long long b, long long c) {
        return to_string(classify(make_triple(a, b, c)));
    };
    CHECK(type_of(5, 12, 13) == "e1");
    CHECK(type_of(10, 24, 26) == "e1");  // multiple of e1
    CHECK(type_of(8, 15, 17) == "e2");
    CHECK(type_of(7, 24, 25) == "e3");
    CHECK(type_of(12, 35, 37) == "e4");
    CHECK(type_of(9, 40, 41) == "e5");
    CHECK(type_of(11, 60, 61) == "e6");
    CHECK(type_of(16, 63, 65) == "e7");
    CHECK(type_of(33, 56, 65) == "e8");  // same c as e7, larger a
    CHECK(type_of(13, 84, 85) == "e9");
    CHECK(type_of(36, 77, 85) == "e10");
    CHECK(type_of(39, 80, 89) == "e11");
}
