#include <doctest.h>

#include <random>

#include "crosscut/bigint.hpp"

using crosscut::BigInt;

TEST_CASE("bigint small arithmetic matches __int128") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        long long a = static_cast<long long>(rng()) >> (rng() % 40);
        long long b = static_cast<long long>(rng()) >> (rng() % 40);
        BigInt A(a), B(b);
        __int128 s = static_cast<__int128>(a) + b;
        __int128 d = static_cast<__int128>(a) - b;
        __int128 p = static_cast<__int128>(a) * b;
        auto eq = [](const BigInt& x, __int128 y) {
            bool neg = y < 0;
            unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(y) : y;
            std::string str;
            if (mag == 0) str = "0";
            while (mag) {
                str.insert(str.begin(), static_cast<char>('0' + int(mag % 10)));
                mag /= 10;
            }
            if (neg && str != "0") str.insert(str.begin(), '-');
            return x.to_string() == str;
        };
        CHECK(eq(A + B, s));
        CHECK(eq(A - B, d));
        CHECK(eq(A * B, p));
        CHECK(((A <=> B) == (a <=> b)));
    }
}

TEST_CASE("bigint grows past 64 bits exactly") {
    BigInt x(1);
    for (int i = 0; i < 40; ++i) x *= BigInt(10);
    CHECK(x.to_string() == "1" + std::string(40, '0'));
    CHECK(!x.fits_int64());
    CHECK((x - x).is_zero());
    CHECK((x + (-x)).is_zero());
    BigInt y = x * x;
    CHECK(y.to_string() == "1" + std::string(80, '0'));
    CHECK(y > x);
    CHECK(-y < x);

    // associativity / distributivity spot checks across the promotion line
    BigInt big = BigInt::from_decimal("9223372036854775807");  // int64 max
    CHECK((big + BigInt(1)) - BigInt(1) == big);
    CHECK((big + big).to_string() == "18446744073709551614");
    CHECK(BigInt::from_decimal("-9223372036854775808").to_string() ==
          "-9223372036854775808");
}

TEST_CASE("bigint decimal parsing and printing") {
    CHECK(BigInt::from_decimal("0").is_zero());
    CHECK(BigInt::from_decimal("-0").is_zero());
    CHECK(BigInt::from_decimal("+17").to_string() == "17");
    CHECK(BigInt::from_decimal("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK_THROWS(BigInt::from_decimal(""));
    CHECK_THROWS(BigInt::from_decimal("12x"));

    CHECK(BigInt(2500).to_decimal_string(3) == "2.5");
    CHECK(BigInt(-2500).to_decimal_string(3) == "-2.5");
    CHECK(BigInt(25).to_decimal_string(3) == "0.025");
    CHECK(BigInt(25000).to_decimal_string(3) == "25");
    CHECK(BigInt(0).to_decimal_string(2) == "0");
    CHECK(BigInt(7).to_decimal_string(0) == "7");
}

TEST_CASE("bigint round trips strings") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        std::string s;
        int len = 1 + int(rng() % 45);
        s.reserve(len + 1);
        if (rng() % 2) s.push_back('-');
        s.push_back(static_cast<char>('1' + rng() % 9));
        for (int j = 1; j < len; ++j) s.push_back(static_cast<char>('0' + rng() % 10));
        CHECK(BigInt::from_decimal(s).to_string() == s);
    }
}
