#include <doctest.h>

#include "ccx/bigint.hpp"
#include "ccx/rng.hpp"

#include <string>

using ccx::BigInt;

TEST_CASE("construction and decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789LL).to_string() == "1234567890123456789");
    CHECK(BigInt("-9999999999999999999999999999").to_string() ==
          "-9999999999999999999999999999");
    CHECK(BigInt("00042").to_string() == "42");
    CHECK(BigInt(INT64_MIN).to_ll() == INT64_MIN);
}

TEST_CASE("arithmetic against 64-bit reference") {
    ccx::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.range(-1000000, 1000000);
        long long b = rng.range(-1000000, 1000000);
        BigInt A(a), B(b);
        CHECK((A + B).to_ll() == a + b);
        CHECK((A - B).to_ll() == a - b);
        CHECK((A * B).to_ll() == a * b);
        if (b != 0) {
            CHECK((A / B).to_ll() == a / b);
            CHECK((A % B).to_ll() == a % b);
        }
    }
}

TEST_CASE("big multiplication and division") {
    BigInt a("123456789012345678901234567890");
    BigInt b("987654321098765432109876543210");
    BigInt p = a * b;
    CHECK(p.to_string() ==
          "121932631137021795226185032733622923332237463801111263526900");
    CHECK(p / a == b);
    CHECK(p / b == a);
    CHECK((p + BigInt(17)) % a == BigInt(17));
    BigInt q, r;
    BigInt::divmod(p + BigInt(17), b, q, r);
    CHECK(q == a);
    CHECK(r == BigInt(17));
}

TEST_CASE("floor division semantics") {
    BigInt q, r;
    BigInt::fdivmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q.to_ll() == -4);
    CHECK(r.to_ll() == 1);
    BigInt::fdivmod(BigInt(7), BigInt(-2), q, r);
    CHECK(q.to_ll() == -4);
    CHECK(r.to_ll() == -1);
}

TEST_CASE("gcd, isqrt, pow") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).to_ll() == 6);
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_ll() == 5);
    CHECK(BigInt::isqrt(BigInt(0)).to_ll() == 0);
    CHECK(BigInt::isqrt(BigInt(15)).to_ll() == 3);
    CHECK(BigInt::isqrt(BigInt(16)).to_ll() == 4);
    BigInt big = BigInt::pow(BigInt(10), 40);
    CHECK(BigInt::isqrt(big) == BigInt::pow(BigInt(10), 20));
    CHECK(BigInt::isqrt(big - 1) == BigInt::pow(BigInt(10), 20) - 1);
    ccx::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        BigInt n(rng.range(0, 1LL << 40));
        BigInt s = BigInt::isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
}

TEST_CASE("comparisons") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-5) < BigInt(-3));
    CHECK(BigInt("100000000000000000000") > BigInt("99999999999999999999"));
}

TEST_CASE("division identity on random wide operands") {
    ccx::Rng rng(77);
    auto rand_big = [&](int limbs) {
        std::string s = "1";
        for (int i = 0; i < limbs * 9; ++i) s.push_back(static_cast<char>('0' + rng.below(10)));
        BigInt v(s);
        return rng.coin() ? v : -v;
    };
    for (int it = 0; it < 300; ++it) {
        BigInt a = rand_big(1 + static_cast<int>(rng.below(6)));
        BigInt b = rand_big(1 + static_cast<int>(rng.below(4)));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        CHECK((r.is_zero() || r.is_neg() == a.is_neg()));
        BigInt fq, fr;
        BigInt::fdivmod(a, b, fq, fr);
        CHECK(fq * b + fr == a);
        CHECK((fr.is_zero() || fr.is_neg() == b.is_neg()));
    }
}

TEST_CASE("division corner patterns exercise the add-back path") {
    // structured limb patterns around the 2^32 boundaries
    std::vector<unsigned long long> vals{0ull, 1ull, 0x80000000ull, 0x80000001ull,
                                         0xffffffffull, 0xfffffffeull};
    for (auto a3 : vals)
        for (auto a2 : vals)
            for (auto a1 : vals)
                for (auto b1 : vals)
                    for (auto b0 : vals) {
                        if (b1 == 0) continue;  // keep the divisor two limbs
                        BigInt a = (BigInt(static_cast<long long>(a3)) *
                                        BigInt::pow(BigInt(2), 64) +
                                    BigInt(static_cast<long long>(a2)) *
                                        BigInt::pow(BigInt(2), 32) +
                                    BigInt(static_cast<long long>(a1)));
                        BigInt b = BigInt(static_cast<long long>(b1)) *
                                       BigInt::pow(BigInt(2), 32) +
                                   BigInt(static_cast<long long>(b0));
                        BigInt q, r;
                        BigInt::divmod(a, b, q, r);
                        REQUIRE(q * b + r == a);
                        REQUIRE(r < b);
                        REQUIRE(!r.is_neg());
                    }
}
