#include <doctest.h>

#include "voa/rational.hpp"
#include "voa/util.hpp"

using namespace voa;

TEST_CASE("bigint arithmetic against 64-bit reference") {
    SplitMix64 rng(42);
    for (int it = 0; it < 500; ++it) {
        long long a = rng.range(-1000000, 1000000);
        long long b = rng.range(-1000000, 1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint string round trip and large values") {
    BigInt v = BigInt::parse("987654321098765432109876543210987654321");
    CHECK(v.to_string() == "987654321098765432109876543210987654321");
    CHECK((-v).to_string() == "-987654321098765432109876543210987654321");
    // 40! has 48 digits; divide it back down
    BigInt fact(1);
    for (int i = 2; i <= 40; ++i) fact = fact * BigInt(i);
    CHECK(fact.to_string() ==
          "815915283247897734345611269596115894272000000000");
    BigInt q = fact;
    for (int i = 40; i >= 2; --i) q = q / BigInt(i);
    CHECK(q == BigInt(1));
}

TEST_CASE("bigint division invariants on random dividends") {
    SplitMix64 rng(7);
    for (int it = 0; it < 300; ++it) {
        BigInt a = BigInt(rng.range(-100000, 100000)) * BigInt(rng.range(0, 1000000)) +
                   BigInt(rng.range(-5000, 5000));
        BigInt b = BigInt(rng.range(-100000, 100000));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
    }
}

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 17) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::parse("-21/35") == Rational(-3, 5));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational field axioms on random values") {
    SplitMix64 rng(11);
    auto rnd = [&] { return Rational(rng.range(-20, 20), rng.range(1, 20)); };
    for (int it = 0; it < 200; ++it) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("binomial coefficients with negative upper argument") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 7) == Rational(0));
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(binomial(-2, 2) == Rational(3));
    CHECK(binomial(-3, 1) == Rational(-3));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(0) == Rational(1));
}
