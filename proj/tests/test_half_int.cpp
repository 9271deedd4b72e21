#include "spindec/half_int.hpp"
#include "spindec/weight.hpp"

#include <doctest.h>

using namespace spindec;

TEST_CASE("half-integer arithmetic is exact") {
    const HalfInt three_halves = HalfInt::from_doubled(3);
    const HalfInt two(2);
    CHECK(three_halves + three_halves == HalfInt(3));
    CHECK(two - three_halves == HalfInt::from_doubled(1));
    CHECK(-three_halves < HalfInt(0));
    CHECK((-three_halves).abs() == three_halves);
    CHECK(three_halves * 3 == HalfInt::from_doubled(9));
    CHECK(!three_halves.is_integer());
    CHECK(two.is_integer());
    CHECK(HalfInt(0).is_zero());
}

TEST_CASE("half-integer wire strings round-trip") {
    for (std::int64_t d = -9; d <= 9; ++d) {
        const HalfInt h = HalfInt::from_doubled(d);
        HalfInt back;
        REQUIRE(HalfInt::parse(h.to_string(), back));
        CHECK(back == h);
    }
    CHECK(HalfInt::from_doubled(3).to_string() == "3/2");
    CHECK(HalfInt::from_doubled(-1).to_string() == "-1/2");
    CHECK(HalfInt(2).to_string() == "2");

    HalfInt h;
    CHECK(HalfInt::parse("-7/2", h));
    CHECK(h.doubled() == -7);
    CHECK_FALSE(HalfInt::parse("1.5", h));
    CHECK_FALSE(HalfInt::parse("3/4", h));
    CHECK_FALSE(HalfInt::parse("", h));
    CHECK_FALSE(HalfInt::parse("x", h));
    CHECK_FALSE(HalfInt::parse("1/", h));
}

TEST_CASE("weight parity classes") {
    CHECK(Weight::from_doubled({2, 4}).parity() == Parity::integral);
    CHECK(Weight::from_doubled({1, 3}).parity() == Parity::half_integral);
    CHECK(Weight::from_doubled({1, 2}).parity() == Parity::mixed);
    CHECK(sum_parity(Parity::half_integral, Parity::half_integral) == Parity::integral);
    CHECK(sum_parity(Parity::integral, Parity::half_integral) == Parity::half_integral);

    const Weight a = Weight::from_doubled({3, 1});
    const Weight b = Weight::from_doubled({1, 1});
    CHECK((a + b) == Weight::from_doubled({4, 2}));
    CHECK((a - b) == Weight::from_doubled({2, 0}));
    CHECK(ip4(a, b) == 4); // <(3/2,1/2),(1/2,1/2)> = 1
}
