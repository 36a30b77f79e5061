#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "randfib/big_count.hpp"

using randfib::BigCount;

TEST_CASE("small arithmetic matches machine words") {
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 500; ++iter) {
        const std::uint64_t a = rng() >> 33, b = rng() >> 33;
        CHECK((BigCount(a) + BigCount(b)).as_u64() == a + b);
        CHECK((BigCount(a) * BigCount(b)).as_u64() == a * b);
        CHECK((BigCount(a) < BigCount(b)) == (a < b));
    }
}

TEST_CASE("decimal round trip across limb boundaries") {
    const std::string digits = "123456789012345678901234567890123456789";
    CHECK(BigCount::from_decimal(digits).to_decimal() == digits);
    CHECK(BigCount(0).to_decimal() == "0");
    CHECK(BigCount::from_decimal("18446744073709551616").to_decimal() ==
          "18446744073709551616");  // 2^64
}

TEST_CASE("powers and carries") {
    CHECK(BigCount::pow(2, 64).to_decimal() == "18446744073709551616");
    CHECK(BigCount::pow(10, 30).to_decimal() == std::string("1") + std::string(30, '0'));
    CHECK(BigCount::pow(7, 0).as_u64() == 1);
    // (2^64 - 1)^2 = 2^128 - 2^65 + 1
    const BigCount x(~std::uint64_t{0});
    CHECK((x * x).to_decimal() == "340282366920938463426481119284349108225");
}

TEST_CASE("exact division and shifts guard their exactness") {
    const BigCount v = BigCount::pow(3, 40) * BigCount(1000);
    CHECK(v.div_exact(8).to_decimal() == (BigCount::pow(3, 40) * BigCount(125)).to_decimal());
    CHECK_THROWS_AS(BigCount(10).div_exact(3), std::logic_error);
    CHECK(BigCount::pow(2, 100).shift_right_exact(100).as_u64() == 1);
    CHECK_THROWS_AS(BigCount(6).shift_right_exact(2), std::logic_error);
    std::uint64_t rem = 0;
    CHECK(BigCount(1000007).div_u64(10, rem).as_u64() == 100000);
    CHECK(rem == 7);
}

TEST_CASE("float conversions stay accurate far past 64 bits") {
    const BigCount big = BigCount::pow(10, 100);
    CHECK(big.log_natural() == doctest::Approx(100.0 * std::log(10.0)).epsilon(1e-13));
    CHECK(BigCount::ratio(BigCount::pow(10, 50), BigCount::pow(10, 49)) ==
          doctest::Approx(10.0).epsilon(1e-13));
    CHECK(BigCount::ratio(BigCount(1), BigCount::pow(2, 80)) ==
          doctest::Approx(std::pow(2.0, -80)).epsilon(1e-13));
    CHECK(BigCount(123456789).to_double() == 123456789.0);
    CHECK(BigCount::pow(2, 80).to_double() == doctest::Approx(1.2089258196146292e24));
    CHECK(big.bit_length() == 333);  // floor(100 log2 10) + 1
}
