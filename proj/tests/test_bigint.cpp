#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcalg/bigint.hpp"

using namespace arcalg;

TEST_CASE("small arithmetic round trips through strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt::from_string("-42") == BigInt(-42));
}

TEST_CASE("arithmetic agrees with int64 on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int t = 0; t < 2000; ++t) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("multi-limb division") {
    BigInt a = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
    BigInt b = BigInt::from_string("18446744073709551616");                     // 2^64
    CHECK((a / b) == b);
    CHECK((a % b).is_zero());
    BigInt c = a + BigInt(12345);
    CHECK((c % b) == BigInt(12345));
    CHECK(BigInt::gcd(a, b) == b);
}

TEST_CASE("rationals normalize") {
    BigRational half(BigInt(2), BigInt(4));
    CHECK(half.num() == BigInt(1));
    CHECK(half.den() == BigInt(2));
    CHECK((half + half) == BigRational(1));
    CHECK((BigRational(1) / BigRational(BigInt(-3))).to_string() == "-1/3");
}

TEST_CASE("gaussian integers are euclidean") {
    GaussInt a(BigInt(7), BigInt(3));
    GaussInt b(BigInt(2), BigInt(-1));
    GaussInt q, r;
    divmod(a, b, q, r);
    CHECK(a == q * b + r);
    CHECK(r.norm() < b.norm());

    GaussInt i = GaussInt::i();
    CHECK((i * i) == GaussInt(-1));
    CHECK(i.is_unit());
    CHECK(GaussInt(BigInt(0), BigInt(-5)).canonical_associate() == GaussInt(BigInt(5), BigInt(0)));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int t = 0; t < 500; ++t) {
        GaussInt x(BigInt(dist(rng)), BigInt(dist(rng)));
        GaussInt y(BigInt(dist(rng)), BigInt(dist(rng)));
        if (y.is_zero()) continue;
        GaussInt qq, rr;
        divmod(x, y, qq, rr);
        CHECK(x == qq * y + rr);
        CHECK(rr.norm() < y.norm());
        GaussInt g = GaussInt::gcd(x, y);
        if (!g.is_zero()) {
            GaussInt q1, r1, q2, r2;
            divmod(x, g, q1, r1);
            divmod(y, g, q2, r2);
            CHECK(r1.is_zero());
            CHECK(r2.is_zero());
        }
    }
}

TEST_CASE("gaussian rationals divide") {
    GaussRational a(BigRational(3), BigRational(2));
    GaussRational b(BigRational(1), BigRational(-1));
    GaussRational c = a / b;
    CHECK(c * b == a);
}
