#include <gtest/gtest.h>

#include <unordered_set>

#include "mmm/rational.hpp"

using mmm::Rational;

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
    EXPECT_EQ(Rational::parse("-325/16").str(), "-325/16");
    EXPECT_EQ(Rational::parse("4/2").str(), "2");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational::parse("-0").str(), "0");
    EXPECT_EQ(Rational::parse("50130770/75676641"), Rational(50130770, 75676641));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/02", "1.5", "1/-2", "a/b", " 1/2", "1/2 ", "+1"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ArithmeticIsExact) {
    const Rational a(333, 8), x(341, 666);
    EXPECT_EQ(a * x, Rational(341, 16));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
    EXPECT_LT(Rational(706817, 1380274), Rational(1413973, 2761210));
    EXPECT_GT(Rational(339, 662), Rational(2911001, 5684610));
}

TEST(Rational, MulIntKeepsCanonicalForm) {
    Rational r(5, 12);
    r.mul_int(18);
    EXPECT_EQ(r.str(), "15/2");
    r.mul_int(-4);
    EXPECT_EQ(r.str(), "-30");
    r.mul_int(0);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(r.den(), 1);

    Rational s(-7, 9);
    s.mul_int(-3);
    EXPECT_EQ(s, Rational(7, 3));
}

TEST(Rational, HalveAndMidpoint) {
    Rational r(3, 4);
    r.halve();
    EXPECT_EQ(r, Rational(3, 8));
    Rational even(6);
    even.halve();
    EXPECT_EQ(even.str(), "3");
    EXPECT_EQ(mmm::midpoint(Rational(1, 2), Rational(341, 666)), Rational(337, 666));
}

TEST(Rational, PowersOfTen) {
    EXPECT_EQ(mmm::pow10_inverse(0), Rational(1));
    EXPECT_EQ(mmm::pow10_inverse(5), Rational(1, 100000));
    EXPECT_EQ(mmm::pow10_inverse(60).den().get_str().size(), 61u);
}

TEST(Rational, HashAgreesWithEquality) {
    std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(-1, 2), Rational(3, 6)};
    EXPECT_EQ(set.size(), 2u);
}
